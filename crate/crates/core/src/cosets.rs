//! Todd-Coxeter coset enumeration: HLT with lookahead, plus a stack of
//! deductions scanned against relator conjugates after each definition.
//!
//! Cosets are numbered from 1, coset 1 being the subgroup. Column `2g` holds
//! the action of generator `g`, column `2g + 1` that of its inverse, and 0
//! marks an undefined entry. Coincidences are merged with a union-find
//! forwarding map and processed to closure immediately.

use num_bigint::BigInt;

use crate::invariants::Order;
use crate::jfamily::{group_order, JParams};
use crate::presentation::{build_j_presentation, GroupPresentation, Presentation, Word};
use crate::{Error, Result};

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

/// Fraction of `max_cosets` at which the first lookahead pass runs.
const LOOKAHEAD_NUM: usize = 3;
const LOOKAHEAD_DEN: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetOutcome {
    Index(usize),
    /// The table would have needed more than `max_cosets` rows.
    Exceeded { max_cosets: usize },
}

impl CosetOutcome {
    pub fn index(&self) -> Option<usize> {
        match self {
            CosetOutcome::Index(i) => Some(*i),
            CosetOutcome::Exceeded { .. } => None,
        }
    }
}

/// A closed coset table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generators: usize,
    cosets: usize,
    /// Row-major, `(index + 1) * 2 * generators` entries; row 0 is unused.
    entries: Vec<u32>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.cosets
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    fn width(&self) -> usize {
        2 * self.generators
    }

    /// Image of `coset` under `x_g^(+-1)`.
    pub fn act(&self, coset: usize, generator: usize, inverse: bool) -> usize {
        self.entries[coset * self.width() + 2 * generator + inverse as usize] as usize
    }

    /// Image of `coset` under a word.
    pub fn trace(&self, coset: usize, w: &Word) -> usize {
        let mut c = coset;
        for l in w.letters() {
            for _ in 0..l.exponent.unsigned_abs() {
                c = self.act(c, l.generator, l.exponent < 0);
            }
        }
        c
    }

    /// Every entry is defined and each generator column is inverse to its
    /// partner.
    pub fn is_closed(&self) -> bool {
        let w = self.width();
        (1..=self.index()).all(|c| {
            (0..w).all(|x| {
                let d = self.entries[c * w + x] as usize;
                d >= 1 && d <= self.index() && self.entries[d * w + (x ^ 1)] as usize == c
            })
        })
    }

    /// Every relator fixes every coset and every subgroup generator fixes
    /// coset 1.
    pub fn is_sound(&self, relators: &[Word], subgroup: &[Word]) -> bool {
        self.is_closed()
            && (1..=self.index()).all(|c| relators.iter().all(|r| self.trace(c, r) == c))
            && subgroup.iter().all(|h| self.trace(1, h) == 1)
    }
}

fn word_columns(w: &Word) -> Vec<usize> {
    let mut cols = Vec::with_capacity(w.length() as usize);
    for l in w.letters() {
        let col = 2 * l.generator + (l.exponent < 0) as usize;
        cols.extend(std::iter::repeat_n(col, l.exponent.unsigned_abs() as usize));
    }
    cols
}

struct NoSpace;

struct Enumerator {
    width: usize,
    max_cosets: usize,
    table: Vec<u32>,
    /// Forwarding map; `parent[c] == c` for live cosets.
    parent: Vec<u32>,
    /// Highest allocated coset number.
    allocated: usize,
    live: usize,
    queue: Vec<u32>,
    /// Entries set since the last deduction pass, as `(coset, column)`.
    deductions: Vec<(u32, u32)>,
    /// Cyclic conjugates of relators and their inverses, by first column.
    conjugates: Vec<Vec<Vec<usize>>>,
}

const MAX_DEDUCTIONS: usize = 1 << 16;

fn conjugates_by_column(relators: &[Vec<usize>], width: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_col: Vec<Vec<Vec<usize>>> = vec![Vec::new(); width];
    for r in relators {
        let inv: Vec<usize> = r.iter().rev().map(|&x| x ^ 1).collect();
        for w in [r, &inv] {
            for i in 0..w.len() {
                let mut rot = w[i..].to_vec();
                rot.extend_from_slice(&w[..i]);
                let list = &mut by_col[rot[0]];
                if !list.contains(&rot) {
                    list.push(rot);
                }
            }
        }
    }
    by_col
}

impl Enumerator {
    fn new(generators: usize, max_cosets: usize) -> Self {
        let width = 2 * generators;
        Enumerator {
            width,
            max_cosets,
            table: vec![0; 2 * width],
            parent: vec![0, 1],
            allocated: 1,
            live: 1,
            queue: Vec::new(),
            deductions: Vec::new(),
            conjugates: vec![Vec::new(); width],
        }
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.width + x] as usize
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c * self.width + x] = d as u32;
    }

    /// Sets `c.x = d` and `d.x^-1 = c`, recording the deduction.
    fn join(&mut self, c: usize, x: usize, d: usize) {
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        // Dropping deductions is safe: the relator scans in `process` and
        // `lookahead` still see every coset.
        if self.deductions.len() < MAX_DEDUCTIONS {
            self.deductions.push((c as u32, x as u32));
        }
    }

    /// Scans the relator conjugates through each recorded deduction.
    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            let (c, x) = (c as usize, x as usize);
            if !self.is_live(c) {
                continue;
            }
            for i in 0..self.conjugates[x].len() {
                if !self.is_live(c) {
                    break;
                }
                let r = std::mem::take(&mut self.conjugates[x][i]);
                // Without definitions a scan cannot run out of space.
                let _ = self.scan(c, &r, false);
                self.conjugates[x][i] = r;
            }
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == 0 || !self.is_live(d) {
                continue;
            }
            let y = x ^ 1;
            for i in 0..self.conjugates[y].len() {
                if !self.is_live(d) {
                    break;
                }
                let r = std::mem::take(&mut self.conjugates[y][i]);
                let _ = self.scan(d, &r, false);
                self.conjugates[y][i] = r;
            }
        }
    }

    #[inline]
    fn is_live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn new_coset(&mut self) -> std::result::Result<usize, NoSpace> {
        if self.allocated >= self.max_cosets {
            return Err(NoSpace);
        }
        self.allocated += 1;
        self.live += 1;
        let c = self.allocated;
        self.table.extend(std::iter::repeat_n(0, self.width));
        self.parent.push(c as u32);
        Ok(c)
    }

    fn define(&mut self, c: usize, x: usize) -> std::result::Result<usize, NoSpace> {
        let d = self.new_coset()?;
        self.join(c, x, d);
        Ok(d)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut c = c;
        while self.parent[c] as usize != r {
            let next = self.parent[c] as usize;
            self.parent[c] = r as u32;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
            self.live -= 1;
            self.queue.push(hi as u32);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i] as usize;
            i += 1;
            for x in 0..self.width {
                let d = self.get(g, x);
                if d == 0 {
                    continue;
                }
                self.set(d, x ^ 1, 0);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != 0 {
                    self.merge(nu, mx);
                    continue;
                }
                let nx = self.get(nu, x ^ 1);
                if nx != 0 {
                    self.merge(mu, nx);
                    continue;
                }
                self.join(mu, x, nu);
            }
        }
    }

    /// Traces `w` from `c` in both directions. Fills the single gap left by
    /// a deduction and, when `fill` is set, defines new cosets to close
    /// longer gaps.
    fn scan(&mut self, c: usize, w: &[usize], fill: bool) -> std::result::Result<(), NoSpace> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len() - 1;
        loop {
            while i <= j {
                let next = self.get(f, w[i]);
                if next == 0 {
                    break;
                }
                f = next;
                i += 1;
            }
            if i > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i {
                let next = self.get(b, w[j] ^ 1);
                if next == 0 {
                    break;
                }
                b = next;
                if j == 0 {
                    // Only reachable when i == 0 too; the whole word traced
                    // backwards.
                    self.coincidence(f, b);
                    return Ok(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.join(f, w[i], b);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Scans every relator at every live coset without defining, then
    /// renumbers live cosets consecutively. Returns the new number of the
    /// first live coset at or after `cursor`.
    fn lookahead(&mut self, relators: &[Vec<usize>], cursor: usize) -> usize {
        for c in 1..=self.allocated {
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                // Without definitions a scan cannot run out of space.
                let _ = self.scan(c, r, false);
            }
        }
        self.compact(cursor)
    }

    fn compact(&mut self, cursor: usize) -> usize {
        // Every relator was just scanned at every coset.
        self.deductions.clear();
        let mut renum = vec![0u32; self.allocated + 1];
        let mut next = 0usize;
        for c in 1..=self.allocated {
            if self.is_live(c) {
                next += 1;
                renum[c] = next as u32;
            }
        }
        let new_cursor = (cursor..=self.allocated)
            .find(|&c| self.is_live(c))
            .map_or(next + 1, |c| renum[c] as usize);
        let w = self.width;
        let mut table = vec![0u32; (next + 1) * w];
        for c in 1..=self.allocated {
            let nc = renum[c] as usize;
            if nc == 0 {
                continue;
            }
            for x in 0..w {
                let d = self.get(c, x);
                table[nc * w + x] = if d == 0 { 0 } else { renum[d] };
            }
        }
        self.table = table;
        self.parent = (0..=next as u32).collect();
        self.allocated = next;
        self.live = next;
        new_cursor
    }

    fn run(&mut self, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> bool {
        self.conjugates = conjugates_by_column(relators, self.width);
        let mut threshold = self.max_cosets / LOOKAHEAD_DEN * LOOKAHEAD_NUM;
        for h in subgroup {
            while self.scan(1, h, true).is_err() {
                if !self.make_room(relators, 1, &mut threshold).1 {
                    return false;
                }
            }
        }
        let mut c = 1;
        while c <= self.allocated {
            if self.allocated >= threshold {
                let (nc, _) = self.make_room(relators, c, &mut threshold);
                c = nc;
                continue;
            }
            if self.process(c, relators).is_err() {
                let (nc, ok) = self.make_room(relators, c, &mut threshold);
                if !ok {
                    return false;
                }
                c = nc;
                continue;
            }
            c += 1;
        }
        true
    }

    /// Lookahead and compaction; reports whether there is space to continue.
    fn make_room(&mut self, relators: &[Vec<usize>], cursor: usize, threshold: &mut usize) -> (usize, bool) {
        let c = self.lookahead(relators, cursor);
        *threshold = (self.live + (self.max_cosets - self.live) / 2).max(self.allocated + 1);
        (c, self.allocated < self.max_cosets)
    }

    fn process(&mut self, c: usize, relators: &[Vec<usize>]) -> std::result::Result<(), NoSpace> {
        for r in relators {
            if !self.is_live(c) {
                return Ok(());
            }
            self.scan(c, r, true)?;
            self.process_deductions();
        }
        for x in 0..self.width {
            if !self.is_live(c) {
                return Ok(());
            }
            if self.get(c, x) == 0 {
                self.define(c, x)?;
                self.process_deductions();
            }
        }
        Ok(())
    }

    fn into_table(mut self, generators: usize) -> CosetTable {
        self.compact(1);
        CosetTable {
            generators,
            cosets: self.live,
            entries: self.table,
        }
    }
}

fn check_words(p: &GroupPresentation, subgroup: &[Word]) -> Result<()> {
    for h in subgroup {
        if let Some(g) = h.max_generator() {
            if g >= p.generator_count() {
                return Err(Error::invalid(format!(
                    "subgroup word uses generator index {g}, presentation has {}",
                    p.generator_count()
                )));
            }
        }
    }
    Ok(())
}

/// Closed coset table of `<subgroup>` in the group, or `None` when more than
/// `max_cosets` rows would be needed.
pub fn coset_table(
    p: &GroupPresentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<Option<CosetTable>> {
    if max_cosets == 0 {
        return Err(Error::invalid("max_cosets must be at least 1"));
    }
    if max_cosets >= u32::MAX as usize {
        return Err(Error::invalid("max_cosets must fit in 32 bits"));
    }
    check_words(p, subgroup)?;
    let relators: Vec<Vec<usize>> = p.relators().iter().map(word_columns).collect();
    let subgens: Vec<Vec<usize>> = subgroup.iter().map(word_columns).collect();
    let mut e = Enumerator::new(p.generator_count(), max_cosets);
    if !e.run(&relators, &subgens) {
        return Ok(None);
    }
    Ok(Some(e.into_table(p.generator_count())))
}

/// Index of `<subgroup>` in the group presented by `p`.
pub fn enumerate(p: &GroupPresentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetOutcome> {
    Ok(match coset_table(p, subgroup, max_cosets)? {
        Some(t) => CosetOutcome::Index(t.index()),
        None => CosetOutcome::Exceeded { max_cosets },
    })
}

/// Enumeration cross-check of `|J_n(m,k)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCheck {
    pub params: JParams,
    pub expected: BigInt,
    /// Index of the trivial subgroup.
    pub order_index: usize,
    /// Index of `<y>`.
    pub y_index: usize,
}

impl OrderCheck {
    /// `index(1) = nm index(<y>) = |J|`.
    pub fn agrees(&self) -> bool {
        let nm = BigInt::from(self.params.nm());
        BigInt::from(self.order_index) == self.expected
            && nm * BigInt::from(self.y_index) == self.expected
    }
}

/// Same group, with the last relator cyclically rotated right by one
/// syllable.
fn rotate_last_letter(p: &GroupPresentation) -> GroupPresentation {
    let mut rels = p.relators().to_vec();
    if let Some(r) = rels.last_mut() {
        if let Some((last, rest)) = r.letters().split_last() {
            let pairs = std::iter::once(last)
                .chain(rest)
                .map(|l| (l.generator, l.exponent));
            *r = Word::from_pairs(pairs);
        }
    }
    GroupPresentation::new(p.generators().to_vec(), rels).expect("same generators")
}

pub fn verify_order(p: &JParams, max_cosets: usize) -> Result<OrderCheck> {
    let q = p.normalize();
    let expected = match group_order(&q) {
        Order::Finite(v) => v,
        Order::Infinite { .. } => {
            return Err(Error::invalid(format!("{p} is infinite; nothing to enumerate")))
        }
    };
    let pres = build_j_presentation(&q.shortest_relator());
    // HLT is sensitive to where the long relator starts; the conjugate
    // starting at `t^2` sometimes closes where the original does not.
    let rotated = rotate_last_letter(&pres);
    let y = pres.generator_index("y").expect("J has a generator y");
    let run = |sub: &[Word]| -> Result<usize> {
        for p in [&pres, &rotated] {
            if let CosetOutcome::Index(i) = enumerate(p, sub, max_cosets)? {
                return Ok(i);
            }
        }
        Err(Error::CosetLimit { max_cosets })
    };
    Ok(OrderCheck {
        params: q,
        expected,
        order_index: run(&[])?,
        y_index: run(&[Word::generator(y)])?,
    })
}
