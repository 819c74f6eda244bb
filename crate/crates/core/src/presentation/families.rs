use std::fmt;

use num_integer::Integer;

use super::{BicyclicPresentation, CyclicPresentation, GroupPresentation, Word};
use crate::jfamily::JParams;
use crate::{Error, Result};

const T: usize = 0;
const Y: usize = 1;

/// `< t, y | t^n, y^(m-k) t^3 y^k t^2 >`, built from the parameters as given.
pub fn build_j_presentation(p: &JParams) -> GroupPresentation {
    let relators = vec![
        Word::power(T, p.n as i64),
        Word::from_pairs([(Y, p.m - p.k), (T, 3), (Y, p.k), (T, 2)]),
    ];
    GroupPresentation::new(vec!["t".into(), "y".into()], relators).expect("two generators")
}

fn idx(i: i64, rank: usize) -> usize {
    i.rem_euclid(rank as i64) as usize
}

/// `w_n(m,k) = (x_0 x_m ... x_{(n/2-1)m}) (x_k x_{k+m} ... x_{k+(n/2-2)m})^-1`
/// over `nm` generators.
pub fn derived_relator(n: u32, m: i64, k: i64) -> Word {
    let rank = (n as i64 * m) as usize;
    let half = n as i64 / 2;
    let head = Word::product_of((0..half).map(|a| idx(a * m, rank)));
    let tail = Word::product_of((0..half - 1).map(|a| idx(k + a * m, rank)));
    head.concat(&tail.inverse())
}

/// `v_n(m) = x_0 x_m x_{2m} ... x_{(n-1)m}`
pub fn v_relator(n: u32, m: i64) -> Word {
    let rank = (n as i64 * m) as usize;
    Word::product_of((0..n as i64).map(|a| idx(a * m, rank)))
}

/// `u_n(m) = x_0 x_{nm/2}`
pub fn u_relator(n: u32, m: i64) -> Word {
    let rank = n as usize * m as usize;
    Word::product_of([0, rank / 2])
}

fn positive_m(p: &JParams) -> Result<JParams> {
    let q = p.normalize();
    if q.m == 0 {
        return Err(Error::DegenerateInput(format!(
            "{p}: m = 0, the derived subgroup is trivial"
        )));
    }
    Ok(q)
}

/// The bicyclic presentation `G_{nm}(w_n(m,k), v_n(m))` of the derived
/// subgroup (parameters are normalized first).
pub fn build_derived_presentation(p: &JParams) -> Result<BicyclicPresentation> {
    let q = positive_m(p)?;
    BicyclicPresentation::new(
        q.rank(),
        derived_relator(q.n, q.m, q.k),
        v_relator(q.n, q.m),
    )
}

/// `G_{nm}(w_n(m,k), u_n(m))`, which has the same abelianization as the
/// derived presentation.
pub fn build_u_presentation(p: &JParams) -> Result<BicyclicPresentation> {
    let q = positive_m(p)?;
    BicyclicPresentation::new(q.rank(), derived_relator(q.n, q.m, q.k), u_relator(q.n, q.m))
}

/// The refined presentation of the derived subgroup for coprime `(m, k)`.
///
/// n = 4: `x_i x_{i+m} = x_{i+k}`, `[x_i, x_{i+m}]`, `x_i x_{i+2m}`,
/// `x_i^2 = x_{i+2k-m}`.
/// n = 6: `x_i^2 = x_{i+k-m} x_{i+k}`, `x_i x_{i+2m} = x_{i+m}`,
/// `[x_i, x_{i+m}]`, `x_i^3 = x_{i+m-2k}^4`.
///
/// Equations `a = b` are stored as `a b^-1`; families are listed one after
/// another, each over `i = 0 .. nm-1`.
pub fn build_refined_derived_presentation(p: &JParams) -> Result<GroupPresentation> {
    let q = positive_m(p)?;
    if q.m.gcd(&q.k) != 1 {
        return Err(Error::invalid(format!(
            "{p}: the refined presentation needs gcd(m, k) = 1"
        )));
    }
    let (m, k) = (q.m, q.k);
    let rank = q.rank();
    let x = |i: i64| Word::generator(idx(i, rank));
    let xp = |i: i64, e: i64| Word::power(idx(i, rank), e);

    type Family<'a> = Box<dyn Fn(i64) -> Word + 'a>;
    let families: Vec<Family> = match q.n {
        4 => vec![
            Box::new(|i| x(i).concat(&x(i + m)).concat(&x(i + k).inverse())),
            Box::new(|i| Word::commutator(&x(i), &x(i + m))),
            Box::new(|i| x(i).concat(&x(i + 2 * m))),
            Box::new(|i| xp(i, 2).concat(&x(i + 2 * k - m).inverse())),
        ],
        _ => vec![
            Box::new(|i| xp(i, 2).concat(&x(i + k - m).concat(&x(i + k)).inverse())),
            Box::new(|i| x(i).concat(&x(i + 2 * m)).concat(&x(i + m).inverse())),
            Box::new(|i| Word::commutator(&x(i), &x(i + m))),
            Box::new(|i| xp(i, 3).concat(&xp(i + m - 2 * k, -4))),
        ],
    };
    let relators = families
        .iter()
        .flat_map(|f| (0..rank as i64).map(f))
        .collect();
    GroupPresentation::indexed(rank, relators)
}

/// n = 4: `< R, S | R^2, R S^m R S^k R S^(m-k) >`;
/// n = 6: `< R, S | R^2, R S^m R S^k R S^(m-k) R S^k R S^(m-k) >`.
pub fn build_fabc_presentation(p: &JParams) -> GroupPresentation {
    const R: usize = 0;
    const S: usize = 1;
    let (m, k) = (p.m, p.k);
    let mut pairs = vec![(R, 1), (S, m), (R, 1), (S, k), (R, 1), (S, m - k)];
    if p.n == 6 {
        pairs.extend([(R, 1), (S, k), (R, 1), (S, m - k)]);
    }
    let relators = vec![Word::power(R, 2), Word::from_pairs(pairs)];
    GroupPresentation::new(vec!["R".into(), "S".into()], relators).expect("two generators")
}

/// Parameters of the generalized Fibonacci group `F(r, n, l, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FibonacciParams {
    pub r: u64,
    pub n: u64,
    pub l: u64,
    pub s: u64,
}

impl FibonacciParams {
    pub fn new(r: i64, n: i64, l: i64, s: i64) -> Result<Self> {
        if r < 1 || n < 1 || l < 1 || s < 1 {
            return Err(Error::invalid(format!(
                "F({r},{n},{l},{s}): all parameters must be positive"
            )));
        }
        Ok(FibonacciParams {
            r: r as u64,
            n: n as u64,
            l: l as u64,
            s: s as u64,
        })
    }

    /// `(x_0 x_1 ... x_{r-1}) (x_{l-1+r} ... x_{l-1+r+s-1})^-1`, indices mod n.
    pub fn word(&self) -> Word {
        let n = self.n;
        let head = Word::product_of((0..self.r).map(|i| (i % n) as usize));
        let start = self.l - 1 + self.r;
        let tail = Word::product_of((start..start + self.s).map(|i| (i % n) as usize));
        head.concat(&tail.inverse())
    }
}

/// Uses the shortest conventional name: `F(r,n)`, `H(r,n,s)`, `F(r,n,l)` or
/// `F(r,n,l,s)`.
impl fmt::Display for FibonacciParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let FibonacciParams { r, n, l, s } = *self;
        match (l, s) {
            (1, 1) => write!(f, "F({r},{n})"),
            (1, _) => write!(f, "H({r},{n},{s})"),
            (_, 1) => write!(f, "F({r},{n},{l})"),
            _ => write!(f, "F({r},{n},{l},{s})"),
        }
    }
}

pub fn build_fibonacci_presentation(r: i64, n: i64, l: i64, s: i64) -> Result<CyclicPresentation> {
    let fp = FibonacciParams::new(r, n, l, s)?;
    CyclicPresentation::new(fp.n as usize, fp.word())
}

/// `E(r,n,l,s) = < y, t | t^n, y^r t^(s+l-1) y^-s t^-(r+l-1) >`
pub fn build_e_presentation(r: i64, n: i64, l: i64, s: i64) -> Result<GroupPresentation> {
    FibonacciParams::new(r, n, l, s)?;
    const EY: usize = 0;
    const ET: usize = 1;
    let relators = vec![
        Word::power(ET, n),
        Word::from_pairs([(EY, r), (ET, s + l - 1), (EY, -s), (ET, -(r + l - 1))]),
    ];
    GroupPresentation::new(vec!["y".into(), "t".into()], relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;

    fn jp(n: u32, m: i64, k: i64) -> JParams {
        JParams::new(n, m, k).unwrap()
    }

    #[test]
    fn j_presentations() {
        assert_eq!(
            build_j_presentation(&jp(4, 4, 1)).to_string(),
            "< t, y | t^4, y^3 t^3 y t^2 >"
        );
        assert_eq!(
            build_j_presentation(&jp(6, 3, 1)).to_string(),
            "< t, y | t^6, y^2 t^3 y t^2 >"
        );
        // y t^3 t^2 merges
        assert_eq!(
            build_j_presentation(&jp(4, 1, 0)).to_string(),
            "< t, y | t^4, y t^5 >"
        );
    }

    #[test]
    fn derived_words() {
        let d = build_derived_presentation(&jp(4, 3, 1)).unwrap();
        assert_eq!(d.rank(), 12);
        assert_eq!(d.w().to_string(), "x0 x3 x1^-1");
        assert_eq!(d.v().to_string(), "x0 x3 x6 x9");

        let d = build_derived_presentation(&jp(6, 3, 1)).unwrap();
        assert_eq!(d.rank(), 18);
        assert_eq!(d.w().to_string(), "x0 x3 x6 x4^-1 x1^-1");
        assert_eq!(d.v().to_string(), "x0 x3 x6 x9 x12 x15");

        let d = build_derived_presentation(&jp(4, 1, 0)).unwrap();
        assert_eq!(d.rank(), 4);
        assert_eq!(d.w().to_string(), "x0 x1 x0^-1");
    }

    #[test]
    fn degenerate_m_zero() {
        assert!(matches!(
            build_derived_presentation(&jp(4, 0, 3)),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn u_words() {
        let u = build_u_presentation(&jp(4, 2, 1)).unwrap();
        assert_eq!(u.rank(), 8);
        assert_eq!(u.v().to_string(), "x0 x4");
        let u = build_u_presentation(&jp(6, 1, 0)).unwrap();
        assert_eq!(u.v().to_string(), "x0 x3");
    }

    #[test]
    fn refined_n4_relators() {
        let p = build_refined_derived_presentation(&jp(4, 3, 1)).unwrap();
        assert_eq!(p.generators().len(), 12);
        let rels: Vec<String> = p.relators().iter().map(|w| p.render_word(w)).collect();
        assert!(rels.contains(&"x0 x3 x1^-1".to_string()));
        assert!(rels.contains(&"x0 x6".to_string()));
        assert!(rels.contains(&"x0^-1 x3^-1 x0 x3".to_string()));
        // 2k - m = -1
        assert!(rels.contains(&"x0^2 x11^-1".to_string()));
        assert_eq!(rels.len(), 48);
    }

    #[test]
    fn refined_n6_power_relation() {
        let p = build_refined_derived_presentation(&jp(6, 3, 1)).unwrap();
        let rels: Vec<String> = p.relators().iter().map(|w| p.render_word(w)).collect();
        // m - 2k = 1: x_i^3 = x_{i+1}^4
        assert!(rels.contains(&"x0^3 x1^-4".to_string()));
        assert!(build_refined_derived_presentation(&jp(6, 4, 2)).is_err());
    }

    #[test]
    fn fabc_relators() {
        let p = build_fabc_presentation(&jp(4, 4, 1));
        assert_eq!(p.to_string(), "< R, S | R^2, R S^4 R S R S^3 >");
        let p = build_fabc_presentation(&jp(6, 3, 1));
        assert_eq!(p.to_string(), "< R, S | R^2, R S^3 R S R S^2 R S R S^2 >");
    }

    #[test]
    fn fibonacci_words() {
        let f = build_fibonacci_presentation(4, 4, 2, 1).unwrap();
        // x_5 reduces to x_1
        assert_eq!(f.word().to_string(), "x0 x1 x2 x3 x1^-1");
        assert_eq!(FibonacciParams::new(4, 4, 2, 1).unwrap().to_string(), "F(4,4,2)");
        assert_eq!(FibonacciParams::new(5, 4, 1, 2).unwrap().to_string(), "H(5,4,2)");
        assert!(build_fibonacci_presentation(0, 4, 1, 1).is_err());
    }

    #[test]
    fn fibonacci_degenerate() {
        let f = build_fibonacci_presentation(1, 1, 1, 1).unwrap();
        assert!(f.word().is_identity());
        assert_eq!(f.relator_list().len(), 1);
    }

    #[test]
    fn e_presentation() {
        let e = build_e_presentation(4, 4, 2, 1).unwrap();
        assert_eq!(e.to_string(), "< y, t | t^4, y^4 t^2 y^-1 t^-5 >");
    }
}
