//! Parameter sweeps that compute each quantity along independent routes and
//! report every disagreement.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{poly_resultant, IntPolynomial};
use crate::cosets::{verify_order, OrderCheck, DEFAULT_MAX_COSETS};
use crate::invariants::{abelianization, AbelianGroup, Order};
use crate::jfamily::{
    a_closed_form, a_resultant, derived_polynomial, two_generator_q, JParams,
};
use crate::presentation::{build_derived_presentation, build_u_presentation};
use crate::Result;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n: u32,
    pub m_max: i64,
    /// Enumerate cosets for groups of at most this order.
    pub max_order: u64,
    pub max_cosets: usize,
    /// Compare the `(w,v)` and `(w,u)` abelianizations up to this `m`.
    pub lemma41_m_max: i64,
    /// Also sweep cells with `gcd(m,k) > 1`.
    pub include_non_coprime: bool,
}

impl SweepConfig {
    pub fn new(n: u32, m_max: i64) -> Self {
        SweepConfig {
            n,
            m_max,
            max_order: 50_000,
            max_cosets: DEFAULT_MAX_COSETS,
            lemma41_m_max: 5,
            include_non_coprime: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub params: JParams,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub params: JParams,
    pub a_closed: Option<BigInt>,
    pub a_resultant: Order,
    pub derived_snf: AbelianGroup,
    pub cosets: Option<OrderCheck>,
    pub checks: usize,
    pub failures: Vec<Disagreement>,
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    /// Sorted by `(n, m, k)`.
    pub cases: Vec<CaseResult>,
}

impl SweepReport {
    pub fn checks(&self) -> usize {
        self.cases.iter().map(|c| c.checks).sum()
    }

    pub fn disagreements(&self) -> Vec<&Disagreement> {
        self.cases.iter().flat_map(|c| &c.failures).collect()
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.failures.is_empty())
    }

    pub fn enumerated(&self) -> usize {
        self.cases.iter().filter(|c| c.cosets.is_some()).count()
    }
}

/// `|Res(f_w, x^(nm/2) - 1)|`, which equals `2^m - 1` (n = 4) or
/// `3^m - 2^m` (n = 6) for coprime `(m, k)`.
pub fn half_resultant(p: &JParams) -> Result<BigInt> {
    let q = p.normalize();
    let f = derived_polynomial(&q)?;
    let g = IntPolynomial::x_pow_minus_one(q.rank() / 2);
    Ok(poly_resultant(&f, &g)?.magnitude().clone().into())
}

pub fn half_resultant_expected(n: u32, m: i64) -> BigInt {
    let m = m as u32;
    match n {
        4 => BigInt::from(2).pow(m) - 1,
        _ => BigInt::from(3).pow(m) - BigInt::from(2).pow(m),
    }
}

struct Cell {
    params: JParams,
    checks: usize,
    failures: Vec<Disagreement>,
}

impl Cell {
    fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Disagreement {
                params: self.params,
                check: name,
                detail: detail(),
            });
        }
    }
}

fn run_cell(p: JParams, cfg: &SweepConfig) -> Result<CaseResult> {
    let mut cell = Cell {
        params: p,
        checks: 0,
        failures: Vec::new(),
    };
    let coprime = p.is_coprime();
    let a_res = a_resultant(&p)?;
    let snf = abelianization(&build_derived_presentation(&p)?);
    cell.check("resultant = snf", a_res == snf.order(), || {
        format!("resultant {a_res}, snf {}", snf.order())
    });

    let trivial = p.has_trivial_derived();
    let is_one = a_res == Order::Finite(BigInt::from(1));
    cell.check("a = 1 iff J' trivial", is_one == trivial, || {
        format!("a = {a_res}, trivial condition {trivial}")
    });

    let mut a_closed = None;
    if coprime {
        let closed = a_closed_form(&p)?;
        cell.check("closed form = resultant", Order::Finite(closed.clone()) == a_res, || {
            format!("closed form {closed}, resultant {a_res}")
        });
        let mirror = JParams::new(p.n, p.m, p.m - p.k)?;
        let mirrored = a_closed_form(&mirror)?;
        cell.check("closed form symmetric in k -> m-k", mirrored == closed, || {
            format!("{closed} vs {mirrored} at {}", mirror.normalize())
        });
        a_closed = Some(closed);

        let half = half_resultant(&p)?;
        let want = half_resultant_expected(p.n, p.m);
        cell.check("half resultant", half == want, || format!("got {half}, expected {want}"));

        if let Some(q) = two_generator_q(&p) {
            let want = vec![q.clone(), q];
            cell.check("derived = Z_q + Z_q", snf.invariant_factors == want && snf.free_rank == 0, || {
                format!("snf {snf}, expected [{}, {}]", want[0], want[1])
            });
        }
    }

    if p.m <= cfg.lemma41_m_max {
        let u = abelianization(&build_u_presentation(&p)?);
        cell.check("(w,v) and (w,u) abelianizations agree", u == snf, || {
            format!("(w,v): {snf}, (w,u): {u}")
        });
    }

    let mut cosets = None;
    if let Order::Finite(a) = &a_res {
        let order = a * BigInt::from(p.nm());
        if coprime && order <= BigInt::from(cfg.max_order) {
            let c = verify_order(&p, cfg.max_cosets)?;
            cell.check("coset enumeration", c.agrees(), || {
                format!(
                    "expected {}, index(1) = {}, nm * index(<y>) = {}",
                    c.expected,
                    c.order_index,
                    p.nm() as usize * c.y_index
                )
            });
            cosets = Some(c);
        }
    }

    Ok(CaseResult {
        params: p,
        a_closed,
        a_resultant: a_res,
        derived_snf: snf,
        cosets,
        checks: cell.checks,
        failures: cell.failures,
    })
}

pub fn sweep_cells(cfg: &SweepConfig) -> Vec<JParams> {
    let mut cells = Vec::new();
    for m in 1..=cfg.m_max {
        for k in 0..cfg.n as i64 * m {
            let p = JParams { n: cfg.n, m, k };
            if cfg.include_non_coprime || p.is_coprime() {
                cells.push(p);
            }
        }
    }
    cells
}

/// Runs every cell of the sweep in parallel; the report is sorted by
/// `(n, m, k)`.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    JParams::new(cfg.n, cfg.m_max.max(0), 0)?;
    let mut cases = sweep_cells(cfg)
        .into_par_iter()
        .map(|p| run_cell(p, cfg))
        .collect::<Result<Vec<_>>>()?;
    cases.sort_by_key(|c| c.params);
    Ok(SweepReport { cases })
}
