//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails unexpectedly.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cypres::algebra::{poly_resultant, IntPolynomial};
use cypres::cosets::{enumerate, CosetOutcome, DEFAULT_MAX_COSETS};
use cypres::invariants::{abelianization, Order};
use cypres::jfamily::{
    a_closed_form, a_resultant, classify, derived_abelianization_snf, fibonacci_subgroup,
    group_order, is_isomorphic, JParams,
};
use cypres::presentation::{
    build_derived_presentation, build_e_presentation, build_fabc_presentation,
    build_fibonacci_presentation, build_j_presentation, Word,
};
use cypres::verify::{half_resultant, half_resultant_expected, sweep, SweepConfig};

const TC_ORDER_LIMIT: u64 = 50_000;

fn jp(n: u32, m: i64, k: i64) -> JParams {
    JParams::new(n, m, k).unwrap()
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn tc_index(p: &cypres::GroupPresentation, sub: &[Word]) -> Option<usize> {
    match enumerate(p, sub, DEFAULT_MAX_COSETS).unwrap() {
        CosetOutcome::Index(i) => Some(i),
        CosetOutcome::Exceeded { .. } => None,
    }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn coprime_cells(n: u32, m_max: i64) -> Vec<JParams> {
    (1..=m_max)
        .flat_map(|m| (0..n as i64 * m).map(move |k| JParams { n, m, k }))
        .filter(|p| p.is_coprime())
        .collect()
}

fn published_orders() -> Outcome {
    let table = [
        (4, 4, 1, 272),
        (4, 5, 1, 820),
        (4, 5, 2, 500),
        (6, 3, 1, 342),
        (6, 4, 1, 4632),
        (6, 5, 1, 38010),
        (6, 5, 2, 12090),
    ];
    let mut bad = Vec::new();
    for (n, m, k, want) in table {
        let p = jp(n, m, k);
        let nm = big(p.nm());
        let closed = &nm * a_closed_form(&p).unwrap();
        let resultant = group_order(&p);
        let snf = match derived_abelianization_snf(&p).unwrap().order() {
            Order::Finite(a) => Some(&nm * a),
            Order::Infinite { .. } => None,
        };
        let tc = tc_index(&build_j_presentation(&p), &[]);
        let w = big(want);
        if closed != w
            || resultant != Order::Finite(w.clone())
            || snf.as_ref() != Some(&w)
            || tc.map(BigInt::from) != Some(w.clone())
        {
            bad.push(format!(
                "{p}: closed {closed}, resultant {resultant}, snf {snf:?}, cosets {tc:?}, expected {want}"
            ));
        }
    }
    if bad.is_empty() {
        pass("7 groups x 4 paths (closed form, resultant, SNF, Todd-Coxeter) exact")
    } else {
        fail(bad.join("; "))
    }
}

fn cross_path_sweep() -> Outcome {
    let mut total = 0;
    let mut enumerated = 0;
    let mut bad = Vec::new();
    for n in [4, 6] {
        let mut cfg = SweepConfig::new(n, 7);
        cfg.max_order = TC_ORDER_LIMIT;
        cfg.lemma41_m_max = 0;
        let report = sweep(&cfg).unwrap();
        total += report.cases.len();
        enumerated += report.enumerated();
        for c in &report.cases {
            let order = c.a_resultant.finite().map(|a| a * BigInt::from(c.params.nm()));
            let needs_tc = order.as_ref().is_some_and(|o| *o <= BigInt::from(TC_ORDER_LIMIT));
            if c.a_closed.is_none() || (needs_tc && c.cosets.is_none()) {
                bad.push(format!("{}: path missing", c.params));
            }
        }
        bad.extend(
            report
                .disagreements()
                .iter()
                .map(|d| format!("{} [{}] {}", d.params, d.check, d.detail)),
        );
    }
    if bad.is_empty() {
        pass(format!(
            "{total} coprime cells agree on closed form = resultant = SNF; {enumerated} confirmed by Todd-Coxeter (order <= {TC_ORDER_LIMIT})"
        ))
    } else {
        fail(bad.join("; "))
    }
}

fn two_equal_factors() -> Outcome {
    let cases = [((4, 10, 1), 31), ((4, 6, 1), 9), ((6, 8, 1), 337)];
    let mut got = Vec::new();
    let mut ok = true;
    for ((n, m, k), q) in cases {
        let ab = abelianization(&build_derived_presentation(&jp(n, m, k)).unwrap());
        ok &= ab.free_rank == 0 && ab.invariant_factors == vec![big(q), big(q)];
        got.push(format!("J_{n}({m},{k})' = {ab}"));
    }
    let detail = got.join(", ");
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn lemma41() -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    for n in [4, 6] {
        let mut cfg = SweepConfig::new(n, 5);
        cfg.max_order = 0;
        cfg.lemma41_m_max = 5;
        let report = sweep(&cfg).unwrap();
        count += report.cases.len();
        bad.extend(
            report
                .disagreements()
                .iter()
                .filter(|d| d.check.starts_with("(w,v)"))
                .map(|d| format!("{} {}", d.params, d.detail)),
        );
    }
    if bad.is_empty() {
        pass(format!("(w,v) and (w,u) invariant factors agree on {count} cells, m <= 5"))
    } else {
        fail(bad.join("; "))
    }
}

fn half_resultants() -> (usize, Vec<String>) {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in [4, 6] {
        for p in coprime_cells(n, 8) {
            count += 1;
            let got = half_resultant(&p).unwrap();
            let want = half_resultant_expected(n, p.m);
            if got != want {
                bad.push(format!("{p}: {got} != {want}"));
            }
        }
    }
    (count, bad)
}

struct BinomialCase {
    alpha: i64,
    beta: i64,
    k: usize,
    n: usize,
    res: BigInt,
}

impl BinomialCase {
    fn stated(&self) -> BigInt {
        big(self.beta).pow(self.n as u32) - big(self.alpha).pow(self.n as u32)
    }

    /// `(-1)^(n(k+1))`, from `Res(f, g) = (-1)^(deg f deg g) prod g-roots f`.
    fn sign_flips(&self) -> bool {
        self.n % 2 == 1 && self.k % 2 == 0
    }

    fn describe(&self) -> String {
        format!(
            "Res({}x^{} - ({}), x^{} - 1) = {}, b^n - a^n = {}",
            self.alpha,
            self.k,
            self.beta,
            self.n,
            self.res,
            self.stated()
        )
    }
}

fn binomial_cases() -> Vec<BinomialCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    let mut cases = Vec::new();
    while cases.len() < 100 {
        let alpha: i64 = rng.gen_range(-9..=9);
        let beta: i64 = rng.gen_range(-9..=9);
        let n: usize = rng.gen_range(1..=10);
        let k: usize = rng.gen_range(1..=12);
        if alpha == 0 || beta == 0 || n.gcd(&k) != 1 {
            continue;
        }
        let f = &IntPolynomial::monomial(alpha, k) - &IntPolynomial::constant(beta);
        let res = poly_resultant(&f, &IntPolynomial::x_pow_minus_one(n)).unwrap();
        cases.push(BinomialCase {
            alpha,
            beta,
            k,
            n,
            res,
        });
    }
    cases
}

fn resultant_evaluations() -> Outcome {
    let (count, mut bad) = half_resultants();
    let cases = binomial_cases();
    let mut exact = 0;
    for c in &cases {
        let want = if c.sign_flips() { -c.stated() } else { c.stated() };
        exact += !c.sign_flips() as usize;
        if c.res != want {
            bad.push(c.describe());
        }
    }
    if bad.is_empty() {
        pass(format!(
            "{count} coprime cells (m <= 8) give 2^m-1 / 3^m-2^m; {} random Res(ax^k-b, x^n-1) = (-1)^(n(k+1)) (b^n-a^n), {exact} of them with n even or k odd where the sign is +1",
            cases.len()
        ))
    } else {
        fail(bad.join("; "))
    }
}

/// The identity without the sign. Any mismatch the sign does not explain
/// also fails `resultant_evaluations`.
fn binomial_resultant_as_stated() -> Outcome {
    let cases = binomial_cases();
    let wrong: Vec<&BinomialCase> = cases.iter().filter(|c| c.res != c.stated()).collect();
    if wrong.is_empty() {
        return pass(format!("{} instances", cases.len()));
    }
    let odd_even = wrong.iter().filter(|c| c.sign_flips()).count();
    fail(format!(
        "{} of {} instances differ ({odd_even} with n odd and k even), e.g. {}",
        wrong.len(),
        cases.len(),
        wrong.iter().take(3).map(|c| c.describe()).collect::<Vec<_>>().join("; ")
    ))
}

fn fibonacci_orders() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    // With k = m the parameters are not coprime (J is cyclic), so the
    // k = -1 representatives are used.
    for (n, m, k) in [(4, 3, 3), (6, 5, 5)] {
        let r = fibonacci_subgroup(&jp(n, m, k));
        notes.push(format!("J_{n}({m},{k}) -> {}", r.map(|_| "accepted".to_string()).unwrap_or_else(|e| e.to_string())));
    }
    for ((n, m, k), name, order) in [((4, 3, -1), "F(4,4,2)", 39), ((6, 5, -1), "F(6,6,3)", 10655)] {
        let f = fibonacci_subgroup(&jp(n, m, k)).unwrap();
        let (r, en, l, s) = f.e_params();
        let e = build_e_presentation(r, en, l, s).unwrap();
        let t = e.generator_index("t").unwrap();
        let e_order = tc_index(&e, &[]);
        let e_index = tc_index(&e, &[Word::generator(t)]);
        let fib = build_fibonacci_presentation(r, en, l, s).unwrap().to_presentation();
        let f_order = tc_index(&fib, &[]);
        let good = f.params.to_string() == name
            && f.order == big(order)
            && e_index == Some(order as usize)
            && e_order == Some((order * en) as usize)
            && f_order == Some(order as usize);
        ok &= good;
        notes.push(format!(
            "J_{n}({m},{k}) -> {} order {}; |E| = {e_order:?}, [E:<t>] = {e_index:?}, |{}| by enumeration = {f_order:?}",
            f.params, f.order, f.params
        ));
    }
    let detail = notes.join("; ");
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn fabc_orders() -> Outcome {
    let mut bad = Vec::new();
    let cells = coprime_cells(4, 5);
    for p in &cells {
        let want = group_order(p);
        let got = tc_index(&build_fabc_presentation(p), &[]);
        if got.map(|i| Order::Finite(BigInt::from(i))) != Some(want.clone()) {
            bad.push(format!("{p}: F^(a,b,c) gives {got:?}, J gives {want}"));
        }
    }
    if bad.is_empty() {
        pass(format!("{} cells: |F^(m,k,m-k)| = |J_4(m,k)|", cells.len()))
    } else {
        fail(bad.join("; "))
    }
}

fn isomorphism_consistency() -> Outcome {
    let mut iso_pairs = 0;
    let mut distinct_pairs = 0;
    let mut bad = Vec::new();
    for n in [4, 6] {
        let cells = coprime_cells(n, 5);
        let reports: Vec<_> = cells.iter().map(|p| classify(p).unwrap()).collect();
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                let v = is_isomorphic(&cells[i], &cells[j]).unwrap();
                let (a, b) = (&reports[i], &reports[j]);
                if v.isomorphic {
                    iso_pairs += 1;
                    if a.order != b.order
                        || a.structure != b.structure
                        || a.derived_invariants != b.derived_invariants
                    {
                        bad.push(format!("{} ~ {} but invariants differ", cells[i], cells[j]));
                    }
                } else if a.a_value != b.a_value {
                    distinct_pairs += 1;
                    if a.order == b.order {
                        bad.push(format!("{} vs {}: distinct a, equal order {}", cells[i], cells[j], a.order));
                    }
                }
            }
        }
    }
    if bad.is_empty() {
        pass(format!(
            "{iso_pairs} isomorphic pairs share all invariants; {distinct_pairs} non-isomorphic pairs with distinct a have distinct orders"
        ))
    } else {
        fail(bad.join("; "))
    }
}

fn open_question() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for ((n, m, k), want) in [((4, 6, 2), 25), ((6, 6, 2), 361)] {
        let p = jp(n, m, k);
        let d = p.gcd();
        let base = jp(n, m / d, k / d);
        let a = a_resultant(&p).unwrap();
        let snf = derived_abelianization_snf(&p).unwrap();
        let a_base = a_closed_form(&base).unwrap();
        let power = Order::Finite(a_base.pow(d as u32));
        let times = Order::Finite(&a_base * BigInt::from(d));
        let power_holds = a == power && snf.order() == power;
        let times_holds = a == times && snf.order() == times;
        ok &= a == snf.order() && a == Order::Finite(big(want)) && (power_holds || times_holds);
        notes.push(format!(
            "{p}: resultant {a}, SNF {snf}; a(m/d,k/d)^d = {power} [{}], d*a(m/d,k/d) = {times} [{}]",
            if power_holds { "holds" } else { "fails" },
            if times_holds { "holds" } else { "fails" },
        ));
    }
    let detail = notes.join("; ");
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn gm(m: u32) -> BigInt {
    let two = BigInt::from(2);
    let mid = two.pow(m.div_ceil(2));
    match m % 8 {
        1 | 7 => two.pow(m) + 1 - mid,
        _ => two.pow(m) + 1 + mid,
    }
}

fn gaussian_mersenne(literal: bool) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for m in [3i64, 5, 7, 9, 11, 13] {
        // m + k = 2 mod 4; for m = 3 mod 4 that is k = nm - 1.
        let k = if literal || m % 4 == 1 { 1 } else { 4 * m - 1 };
        let p = jp(4, m, k);
        let a = a_closed_form(&p).unwrap();
        let want = gm(m as u32);
        ok &= a == want;
        notes.push(format!("a_4({m},{k}) = {a} vs GM_{m} = {want}"));
    }
    let detail = notes.join(", ");
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn main() {
    /// Name, check, and the reason it is expected to fail (if it is).
    type Criterion = (&'static str, fn() -> Outcome, Option<&'static str>);
    let criteria: Vec<Criterion> = vec![
        ("1  published orders", published_orders, None),
        ("2  cross-path sweep", cross_path_sweep, None),
        ("3  Z_q + Z_q invariant factors", two_equal_factors, None),
        ("4  (w,v) vs (w,u) abelianizations", lemma41, None),
        ("5  resultant evaluations", resultant_evaluations, None),
        (
            "5  Res(ax^k-b, x^n-1) = b^n-a^n without sign",
            binomial_resultant_as_stated,
            Some("off by the sign (-1)^(n(k+1))"),
        ),
        ("6  Fibonacci subgroup orders", fibonacci_orders, None),
        ("7  F^(a,b,c) orders", fabc_orders, None),
        ("8  isomorphism consistency", isomorphism_consistency, None),
        ("9  gcd > 1 abelianization order", open_question, None),
        (
            "10 Gaussian-Mersenne, k = 1 as stated",
            || gaussian_mersenne(true),
            Some("the identity does not hold for m = 3 mod 4"),
        ),
        ("10 Gaussian-Mersenne, m + k = 2 mod 4", || gaussian_mersenne(false), None),
    ];
    let mut unexpected = 0;
    let start = Instant::now();
    for (name, run, expected_failure) in criteria {
        let t = Instant::now();
        let out = run();
        let status = match (out.ok, expected_failure) {
            (true, None) => "PASS".to_string(),
            (false, Some(why)) => format!("FAIL (expected: {why})"),
            (true, Some(_)) => {
                unexpected += 1;
                "PASS (unexpected)".to_string()
            }
            (false, None) => {
                unexpected += 1;
                "FAIL".to_string()
            }
        };
        println!("[{status}] {name} ({:.1}s): {}", t.elapsed().as_secs_f64(), out.detail);
    }
    println!(
        "acceptance: {} unexpected result(s), {:.1}s total",
        unexpected,
        start.elapsed().as_secs_f64()
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
