//! Exact real-root analysis: Sturm-sequence counting, squarefree
//! decomposition, rational root extraction and Vieta consistency checks.
//!
//! No floating point is used anywhere; all interval endpoints are
//! rationals and all sign decisions are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::polynomial::IntPoly;
use crate::{Error, Result};

/// An interval endpoint for root counting.
#[derive(Clone, Debug)]
pub enum Endpoint {
    NegInf,
    At(BigRational),
    PosInf,
}

/// Summary of the root structure of a nonzero integer polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSummary {
    pub degree: usize,
    /// Rational roots with exact multiplicities, ascending.
    pub rational_roots: Vec<(BigRational, usize)>,
    /// Number of distinct real roots.
    pub distinct_real: usize,
    /// Number of real roots counted with multiplicity.
    pub real_with_multiplicity: usize,
}

impl RootSummary {
    pub fn real_rooted(&self) -> bool {
        self.real_with_multiplicity == self.degree
    }
}

/// Removes the integer content, keeping the leading coefficient positive.
fn primitive_positive(p: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
    }
    if p.leading().unwrap().is_negative() {
        g = -g;
    }
    IntPoly::new(p.coeffs().iter().map(|c| c / &g).collect())
}

/// Removes the integer content by a positive divisor only, so every
/// sign in the polynomial is preserved (Sturm chains depend on this).
fn primitive_keep_sign(p: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
    }
    IntPoly::new(p.coeffs().iter().map(|c| c / &g).collect())
}

/// Polynomial remainder over the rationals, returned as a primitive
/// integer polynomial with the same sign behaviour (positive rescaling).
fn signed_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let bd = b.degree().expect("nonzero divisor");
    let lead = BigRational::from_integer(b.leading().unwrap().clone());
    let mut rem: Vec<BigRational> = a
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    while rem.len() >= bd + 1 {
        let top = rem.last().unwrap().clone();
        if top.is_zero() {
            rem.pop();
            continue;
        }
        let shift = rem.len() - 1 - bd;
        let q = top / &lead;
        for (j, bc) in b.coeffs().iter().enumerate() {
            let delta = &q * BigRational::from_integer(bc.clone());
            rem[shift + j] -= delta;
        }
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    // clear denominators with a positive multiplier
    let mut den = BigInt::one();
    for c in &rem {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = rem.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    primitive_keep_sign(&IntPoly::new(ints))
}

/// Primitive gcd of two integer polynomials (Euclid over Q), normalized
/// to a positive leading coefficient.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut x = primitive_positive(a);
    let mut y = primitive_positive(b);
    while !y.is_zero() {
        let r = signed_remainder(&x, &y);
        x = y;
        y = r;
    }
    primitive_positive(&x)
}

/// Squarefree part: p / gcd(p, p'), primitive with positive lead.
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    let pp = primitive_positive(p);
    match pp.degree() {
        None | Some(0) => pp,
        Some(_) => {
            let g = poly_gcd(&pp, &pp.derivative());
            primitive_positive(&pp.exact_div(&g).expect("gcd divides"))
        }
    }
}

/// Squarefree decomposition p = c · ∏ fᵢ^i (Yun); returns the
/// nonconstant primitive factors with their multiplicities.
pub fn squarefree_decomposition(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    let pp = primitive_positive(p);
    if pp.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let dp = pp.derivative();
    let g = poly_gcd(&pp, &dp);
    let mut out = Vec::new();
    if g.degree() == Some(0) {
        out.push((pp, 1));
        return out;
    }
    let mut w = pp.exact_div(&g).expect("gcd divides p");
    let y = dp.exact_div(&g).expect("gcd divides p'");
    let mut z = y.sub(&w.derivative());
    let mut i = 1usize;
    while w.degree().is_some_and(|d| d > 0) {
        let f = if z.is_zero() { w.clone() } else { poly_gcd(&w, &z) };
        if f.degree().is_some_and(|d| d > 0) {
            out.push((primitive_positive(&f), i));
        }
        w = w.exact_div(&f).expect("factor divides");
        let y2 = z.exact_div(&f).expect("factor divides");
        z = y2.sub(&w.derivative());
        i += 1;
    }
    out
}

/// Sturm chain of the squarefree part.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let p0 = squarefree_part(p);
    let mut chain = vec![p0.clone()];
    if p0.degree().is_some_and(|d| d > 0) {
        chain.push(primitive_keep_sign(&p0.derivative()));
        loop {
            let k = chain.len();
            let r = signed_remainder(&chain[k - 2], &chain[k - 1]).neg();
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
    }
    chain
}

fn sign_at_endpoint(p: &IntPoly, e: &Endpoint) -> i32 {
    match p.degree() {
        None => 0,
        Some(d) => match e {
            Endpoint::At(x) => p.sign_at(x),
            Endpoint::PosInf => {
                if p.leading().unwrap().is_positive() {
                    1
                } else {
                    -1
                }
            }
            Endpoint::NegInf => {
                let s = if p.leading().unwrap().is_positive() { 1 } else { -1 };
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        },
    }
}

fn sign_variations(chain: &[IntPoly], e: &Endpoint) -> usize {
    let mut variations = 0;
    let mut prev = 0;
    for p in chain {
        let s = sign_at_endpoint(p, e);
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            variations += 1;
        }
        prev = s;
    }
    variations
}

/// Primitive linear polynomial with root `x`: den·t - num.
fn linear_with_root(x: &BigRational) -> IntPoly {
    IntPoly::new(vec![-x.numer().clone(), x.denom().clone()])
}

/// Number of distinct real roots, over the whole line or inside the
/// open interval (lo, hi).
pub fn real_root_count_distinct(
    p: &IntPoly,
    interval: Option<(BigRational, BigRational)>,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain("root count of the zero polynomial".into()));
    }
    let mut sf = squarefree_part(p);
    if sf.degree().map_or(true, |d| d == 0) {
        return Ok(0);
    }
    match interval {
        None => {
            let chain = sturm_chain(&sf);
            Ok(sign_variations(&chain, &Endpoint::NegInf) - sign_variations(&chain, &Endpoint::PosInf))
        }
        Some((lo, hi)) => {
            if lo >= hi {
                return Err(Error::Domain("empty interval".into()));
            }
            // peel off roots at the endpoints so the interval is open
            for e in [&lo, &hi] {
                if sf.sign_at(e) == 0 {
                    sf = sf.exact_div(&linear_with_root(e)).expect("root divides");
                }
            }
            if sf.degree().map_or(true, |d| d == 0) {
                return Ok(0);
            }
            let chain = sturm_chain(&sf);
            Ok(sign_variations(&chain, &Endpoint::At(lo)) - sign_variations(&chain, &Endpoint::At(hi)))
        }
    }
}

/// Number of real roots counted with multiplicity.
pub fn real_root_count_with_multiplicity(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain("root count of the zero polynomial".into()));
    }
    let mut total = 0;
    for (f, mult) in squarefree_decomposition(p) {
        total += mult * real_root_count_distinct(&f, None)?;
    }
    Ok(total)
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            small.push(k.clone());
            let q = &n / &k;
            if q != k {
                large.push(q);
            }
        }
        k += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// All rational roots with exact multiplicities, ascending.
pub fn rational_roots(p: &IntPoly) -> Result<Vec<(BigRational, usize)>> {
    if p.is_zero() {
        return Err(Error::Domain("roots of the zero polynomial".into()));
    }
    let mut work = primitive_positive(p);
    let mut out: Vec<(BigRational, usize)> = Vec::new();
    // factor out t^k first
    let mut zero_mult = 0;
    while !work.is_zero() && work.coeff(0).is_zero() {
        work = work.exact_div(&IntPoly::from_i64(&[0, 1])).expect("t divides");
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((BigRational::zero(), zero_mult));
    }
    if work.degree().is_some_and(|d| d > 0) {
        let consts = positive_divisors(&work.coeff(0));
        let leads = positive_divisors(work.leading().unwrap());
        for num in &consts {
            for den in &leads {
                if !num.gcd(den).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = BigRational::new(num * BigInt::from(sign), den.clone());
                    let lin = linear_with_root(&cand);
                    let mut mult = 0;
                    while work.sign_at(&cand) == 0 {
                        work = work.exact_div(&lin).expect("root divides");
                        mult += 1;
                    }
                    if mult > 0 {
                        out.push((cand, mult));
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Checks that the multiset `roots` satisfies the coefficient identities
/// of `p`: every elementary symmetric function eⱼ of the roots must
/// equal (-1)^j · a_{d-j}/a_d exactly.
pub fn vieta_check(p: &IntPoly, roots: &[BigRational]) -> Result<bool> {
    let d = p
        .degree()
        .ok_or_else(|| Error::Domain("vieta check on the zero polynomial".into()))?;
    if roots.len() != d {
        return Err(Error::Domain(format!(
            "vieta check needs {d} roots, got {}",
            roots.len()
        )));
    }
    // elementary symmetric functions via the product ∏ (x + rᵢ)
    let mut elem = vec![BigRational::zero(); d + 1];
    elem[0] = BigRational::one();
    for (used, r) in roots.iter().enumerate() {
        for j in (1..=used + 1).rev() {
            let add = elem[j - 1].clone() * r;
            elem[j] += add;
        }
    }
    let lead = BigRational::from_integer(p.leading().unwrap().clone());
    for j in 1..=d {
        let ratio = BigRational::from_integer(p.coeff(d - j)) / &lead;
        let expect = if j % 2 == 1 { -ratio } else { ratio };
        if elem[j] != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full root summary of a nonzero polynomial.
pub fn root_summary(p: &IntPoly) -> Result<RootSummary> {
    let degree = p
        .degree()
        .ok_or_else(|| Error::Domain("root summary of the zero polynomial".into()))?;
    Ok(RootSummary {
        degree,
        rational_roots: rational_roots(p)?,
        distinct_real: real_root_count_distinct(p, None)?,
        real_with_multiplicity: real_root_count_with_multiplicity(p)?,
    })
}

/// Multiplicity of a specific rational number as a root of `p`.
pub fn multiplicity_at(p: &IntPoly, x: &BigRational) -> usize {
    let mut work = p.clone();
    let lin = linear_with_root(x);
    let mut mult = 0;
    while !work.is_zero() && work.sign_at(x) == 0 {
        work = work.exact_div(&lin).expect("root divides");
        mult += 1;
    }
    mult
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    fn product_of_linear(roots: &[i64]) -> IntPoly {
        roots
            .iter()
            .fold(IntPoly::one(), |acc, &r| acc.mul(&p(&[-r, 1])))
    }

    #[test]
    fn no_real_roots_negative_discriminant() {
        // t^2 - 6t + 10
        assert_eq!(real_root_count_distinct(&p(&[10, -6, 1]), None).unwrap(), 0);
        assert_eq!(real_root_count_with_multiplicity(&p(&[10, -6, 1])).unwrap(), 0);
    }

    #[test]
    fn distinct_vs_multiplicity() {
        // (t-1)(t-2)^2
        let f = product_of_linear(&[1, 2, 2]);
        assert_eq!(real_root_count_distinct(&f, None).unwrap(), 2);
        assert_eq!(real_root_count_with_multiplicity(&f).unwrap(), 3);
    }

    #[test]
    fn interval_count() {
        // (t-1)(t-2)(t-3)^2 on (2.5, 3.5) -> one distinct root
        let f = product_of_linear(&[1, 2, 3, 3]);
        let n = real_root_count_distinct(&f, Some((rat(5, 2), rat(7, 2)))).unwrap();
        assert_eq!(n, 1);
    }

    #[test]
    fn interval_is_open() {
        // roots at both endpoints are excluded
        let f = product_of_linear(&[1, 2]);
        let n = real_root_count_distinct(&f, Some((rat(1, 1), rat(2, 1)))).unwrap();
        assert_eq!(n, 0);
        let m = real_root_count_distinct(&f, Some((rat(0, 1), rat(2, 1)))).unwrap();
        assert_eq!(m, 1);
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (t-1)(t-2)^3
        let f = product_of_linear(&[1, 2, 2, 2]);
        let roots = rational_roots(&f).unwrap();
        assert_eq!(roots, vec![(rat(1, 1), 1), (rat(2, 1), 3)]);
    }

    #[test]
    fn rational_roots_none() {
        assert_eq!(rational_roots(&p(&[10, -6, 1])).unwrap(), vec![]);
    }

    #[test]
    fn rational_roots_mixed() {
        // (t-1)(t-2)^2(t-3)
        let f = product_of_linear(&[1, 2, 2, 3]);
        let roots = rational_roots(&f).unwrap();
        assert_eq!(roots, vec![(rat(1, 1), 1), (rat(2, 1), 2), (rat(3, 1), 1)]);
    }

    #[test]
    fn rational_roots_fractional_and_zero() {
        // t (2t - 3)^2 = 4t^3 - 12t^2 + 9t
        let f = p(&[0, 9, -12, 4]);
        let roots = rational_roots(&f).unwrap();
        assert_eq!(roots, vec![(rat(0, 1), 1), (rat(3, 2), 2)]);
    }

    #[test]
    fn vieta_accepts_true_roots() {
        let f = product_of_linear(&[1, 2]);
        assert!(vieta_check(&f, &[rat(1, 1), rat(2, 1)]).unwrap());
        assert!(!vieta_check(&f, &[rat(1, 1), rat(3, 1)]).unwrap());
    }

    #[test]
    fn vieta_with_repeated_roots() {
        // (t-1)(t-2)^3
        let f = product_of_linear(&[1, 2, 2, 2]);
        let roots = vec![rat(1, 1), rat(2, 1), rat(2, 1), rat(2, 1)];
        assert!(vieta_check(&f, &roots).unwrap());
    }

    #[test]
    fn vieta_odd_degree() {
        let f = product_of_linear(&[1, 2, 3]);
        assert!(vieta_check(&f, &[rat(1, 1), rat(2, 1), rat(3, 1)]).unwrap());
        assert!(!vieta_check(&f, &[rat(1, 1), rat(2, 1), rat(4, 1)]).unwrap());
    }

    #[test]
    fn vieta_size_mismatch_is_error() {
        let f = product_of_linear(&[1, 2]);
        assert!(vieta_check(&f, &[rat(1, 1)]).is_err());
    }

    #[test]
    fn squarefree_decomposition_shape() {
        let f = product_of_linear(&[1, 2, 2, 3, 3, 3]);
        let dec = squarefree_decomposition(&f);
        assert_eq!(
            dec,
            vec![(p(&[-1, 1]), 1), (p(&[-2, 1]), 2), (p(&[-3, 1]), 3)]
        );
    }

    #[test]
    fn multiplicity_at_root() {
        let f = product_of_linear(&[1, 2, 2]);
        assert_eq!(multiplicity_at(&f, &rat(2, 1)), 2);
        assert_eq!(multiplicity_at(&f, &rat(1, 1)), 1);
        assert_eq!(multiplicity_at(&f, &rat(5, 1)), 0);
    }

    #[test]
    fn summary_real_rooted() {
        let f = product_of_linear(&[1, 2, 3]);
        let s = root_summary(&f).unwrap();
        assert!(s.real_rooted());
        let g = p(&[10, -6, 1]).mul(&p(&[-1, 1]));
        let s2 = root_summary(&g).unwrap();
        assert_eq!(s2.degree, 3);
        assert_eq!(s2.real_with_multiplicity, 1);
        assert!(!s2.real_rooted());
    }

    #[test]
    fn sturm_agrees_with_rational_roots_on_split_polys() {
        // when the polynomial splits over Q, the two routes must agree
        for roots in [
            vec![1, 2, 3, 4],
            vec![1, 1, 2, 2],
            vec![-3, 0, 0, 5],
            vec![2, 2, 2, 2],
            vec![-1, 1, -2, 2, 7],
        ] {
            let f = product_of_linear(&roots);
            let rr = rational_roots(&f).unwrap();
            let distinct: usize = rr.len();
            let with_mult: usize = rr.iter().map(|(_, m)| m).sum();
            assert_eq!(real_root_count_distinct(&f, None).unwrap(), distinct);
            assert_eq!(real_root_count_with_multiplicity(&f).unwrap(), with_mult);
        }
    }
}
