//! Height-bounded up-down and three-step paths: direct dynamic-programming
//! enumerators, weighted generating polynomials, closed-form generating
//! functions, backward (negative-index) extensions, and the area statistic.

use crate::error::{Error, Result};
use crate::exact::{LinRec, Rat, RatFunc};
use crate::multipoly::{
    spec_b_area, spec_b_to_av, spec_ones, Family, MultiPoly, VarId, XLinRec, XPoly, XRatFunc,
};
use crate::orthopoly::{chebyshev_u_rev, lift, motzkin_p, poly_p};
use num::bigint::BigInt;
use num::{One, Zero};

/// A single step of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// (1, 1)
    Up,
    /// (1, -1)
    Down,
    /// (1, 0), only for three-step paths
    Level,
}

/// A path with steps (1,1), (1,-1) and optionally (1,0), starting at a
/// given height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpDownPath {
    /// Starting height.
    pub start: i64,
    /// Step sequence.
    pub steps: Vec<Step>,
}

impl UpDownPath {
    /// Ending height.
    pub fn end(&self) -> i64 {
        let mut h = self.start;
        for s in &self.steps {
            h += match s {
                Step::Up => 1,
                Step::Down => -1,
                Step::Level => 0,
            };
        }
        h
    }

    /// The sequence of visited heights (length = #steps + 1).
    pub fn heights(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = self.start;
        out.push(h);
        for s in &self.steps {
            h += match s {
                Step::Up => 1,
                Step::Down => -1,
                Step::Level => 0,
            };
            out.push(h);
        }
        out
    }

    /// True when the path stays within [0, k].
    pub fn within(&self, k: i64) -> bool {
        self.heights().iter().all(|&h| (0..=k).contains(&h))
    }
}

/// Weight scheme for up-down paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightScheme {
    /// Every step has weight 1.
    Unweighted,
    /// A down-step from height h has weight B_h.
    BScheme,
    /// The B weights with B_{2i-1} = A_i^{-1} V_i^{-1}, B_{2i} = A_i^{-1} V_{i+1}^{-1}.
    BavScheme,
    /// The B weights with B_i = q^{i-1}; for loop paths this is the area weight.
    QArea,
}

fn check_bounds(k: i64, r: i64, s: i64) -> Result<()> {
    if !(0..=k).contains(&r) || !(0..=k).contains(&s) {
        return Err(Error::BoundViolation(format!("need 0 <= r,s <= k, got k={k} r={r} s={s}")));
    }
    Ok(())
}

/// Weight of a down-step from height h under a scheme.
fn down_weight(h: i64, scheme: WeightScheme) -> MultiPoly {
    match scheme {
        WeightScheme::Unweighted => MultiPoly::one(),
        WeightScheme::BScheme => MultiPoly::var(VarId::b(h as u32)),
        WeightScheme::BavScheme => spec_b_to_av(&MultiPoly::var(VarId::b(h as u32))),
        WeightScheme::QArea => spec_b_area(&MultiPoly::var(VarId::b(h as u32))),
    }
}

/// Number of up-down paths of length n from height r to height s staying
/// within [0, k].
pub fn count_paths(n: u64, k: i64, r: i64, s: i64) -> Result<BigInt> {
    check_bounds(k, r, s)?;
    let mut row = vec![BigInt::zero(); (k + 1) as usize];
    row[r as usize] = BigInt::one();
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); (k + 1) as usize];
        for h in 0..=k as usize {
            if row[h].is_zero() {
                continue;
            }
            if h + 1 <= k as usize {
                next[h + 1] += &row[h];
            }
            if h >= 1 {
                next[h - 1] += &row[h];
            }
        }
        row = next;
    }
    Ok(row[s as usize].clone())
}

/// Weighted sum over all up-down paths of length n from r to s within [0, k].
pub fn weighted_path_poly(n: u64, k: i64, r: i64, s: i64, scheme: WeightScheme) -> Result<MultiPoly> {
    check_bounds(k, r, s)?;
    let mut row = vec![MultiPoly::zero(); (k + 1) as usize];
    row[r as usize] = MultiPoly::one();
    for _ in 0..n {
        let mut next = vec![MultiPoly::zero(); (k + 1) as usize];
        for h in 0..=k as usize {
            if row[h].is_zero() {
                continue;
            }
            if h + 1 <= k as usize {
                next[h + 1] = next[h + 1].add(&row[h]);
            }
            if h >= 1 {
                let w = down_weight(h as i64, scheme);
                next[h - 1] = next[h - 1].add(&row[h].mul(&w));
            }
        }
        row = next;
    }
    Ok(row[s as usize].clone())
}

/// Exhaustive list of up-down paths (or three-step paths when `level` is set)
/// of length n from r to s within [0, k].
pub fn enumerate_paths(n: u64, k: i64, r: i64, s: i64, level: bool) -> Result<Vec<UpDownPath>> {
    check_bounds(k, r, s)?;
    let mut out = Vec::new();
    let mut steps: Vec<Step> = Vec::with_capacity(n as usize);
    fn rec(
        h: i64,
        left: u64,
        k: i64,
        s: i64,
        level: bool,
        start: i64,
        steps: &mut Vec<Step>,
        out: &mut Vec<UpDownPath>,
    ) {
        if left == 0 {
            if h == s {
                out.push(UpDownPath { start, steps: steps.clone() });
            }
            return;
        }
        // Prune: remaining steps must be able to reach s.
        if (h - s).abs() > left as i64 {
            return;
        }
        if h + 1 <= k {
            steps.push(Step::Up);
            rec(h + 1, left - 1, k, s, level, start, steps, out);
            steps.pop();
        }
        if level {
            steps.push(Step::Level);
            rec(h, left - 1, k, s, level, start, steps, out);
            steps.pop();
        }
        if h - 1 >= 0 {
            steps.push(Step::Down);
            rec(h - 1, left - 1, k, s, level, start, steps, out);
            steps.pop();
        }
    }
    rec(r, n, k, s, level, r, &mut steps, &mut out);
    Ok(out)
}

/// Weight of a single path under a scheme.
pub fn path_weight(p: &UpDownPath, scheme: WeightScheme) -> MultiPoly {
    let mut acc = MultiPoly::one();
    let mut h = p.start;
    for s in &p.steps {
        match s {
            Step::Up => h += 1,
            Step::Level => {}
            Step::Down => {
                acc = acc.mul(&down_weight(h, scheme));
                h -= 1;
            }
        }
    }
    acc
}

/// The reversal x^n p_n(1/x) for the monic B-sequence: a polynomial in x^2
/// with constant coefficient 1.
pub fn poly_p_rev(n: u32) -> XPoly {
    poly_p(n).reverse(n as usize)
}

/// Closed-form generating function in x for weighted bounded up-down paths
/// from r to s: the n-th series coefficient is the weighted path sum of
/// length n.
pub fn path_gf_closed(k: i64, r: i64, s: i64, scheme: WeightScheme) -> Result<XRatFunc> {
    check_bounds(k, r, s)?;
    let (lo, hi) = (r.min(s), r.max(s));
    let num_b = poly_p_rev(lo as u32)
        .mul(&poly_p_rev((k - hi) as u32).shift_vars(&[Family::B], (hi + 1) as u32))
        .shift_up((hi - lo) as usize);
    let prefactor = if r > s {
        // Unmatched down-steps from heights s+1..r contribute their weights.
        let mut acc = MultiPoly::one();
        for h in (s + 1)..=r {
            acc = acc.mul(&MultiPoly::var(VarId::b(h as u32)));
        }
        acc
    } else {
        MultiPoly::one()
    };
    let num_b = num_b.scale(&prefactor);
    let den_b = poly_p_rev((k + 1) as u32);
    let (num, den) = match scheme {
        WeightScheme::Unweighted => (
            num_b.map(&|c| spec_ones(c, &[Family::B])),
            den_b.map(&|c| spec_ones(c, &[Family::B])),
        ),
        WeightScheme::BScheme => (num_b, den_b),
        WeightScheme::BavScheme => (num_b.map(&spec_b_to_av), den_b.map(&spec_b_to_av)),
        WeightScheme::QArea => (num_b.map(&spec_b_area), den_b.map(&spec_b_area)),
    };
    XRatFunc::new(num, den)
}

/// Backward extension: the value at index -n (n > 0) of the weighted
/// bounded-path sequence. When the generating function has equal numerator
/// and denominator degree the sequence is extendable only after correcting
/// the constant term; set `corrected` to opt in.
pub fn path_count_negative(
    n: u64,
    k: i64,
    r: i64,
    s: i64,
    scheme: WeightScheme,
    corrected: bool,
) -> Result<MultiPoly> {
    let gf = path_gf_closed(k, r, s, scheme)?;
    let rec = XLinRec::from_xratfunc(&gf)?;
    let rec = if corrected { rec.corrected() } else { rec };
    rec.eval(-(n as i64))
}

/// Number of three-step paths of length n from r to s within [0, k].
pub fn motzkin_count(n: u64, k: i64, r: i64, s: i64) -> Result<BigInt> {
    check_bounds(k, r, s)?;
    let mut row = vec![BigInt::zero(); (k + 1) as usize];
    row[r as usize] = BigInt::one();
    for _ in 0..n {
        let mut next = row.clone();
        for h in 0..=k as usize {
            if row[h].is_zero() {
                continue;
            }
            if h + 1 <= k as usize {
                next[h + 1] += &row[h];
            }
            if h >= 1 {
                next[h - 1] += &row[h];
            }
        }
        row = next;
    }
    Ok(row[s as usize].clone())
}

/// Weighted sum over three-step paths: a level step at height h weighs b_h
/// and a down-step from height h weighs l_h (b_h stored as A_{h+1}, l_h as
/// V_h, matching the Motzkin orthogonal sequence).
pub fn motzkin_weighted_poly(n: u64, k: i64, r: i64, s: i64) -> Result<MultiPoly> {
    check_bounds(k, r, s)?;
    let mut row = vec![MultiPoly::zero(); (k + 1) as usize];
    row[r as usize] = MultiPoly::one();
    for _ in 0..n {
        let mut next = vec![MultiPoly::zero(); (k + 1) as usize];
        for h in 0..=k as usize {
            if row[h].is_zero() {
                continue;
            }
            if h + 1 <= k as usize {
                next[h + 1] = next[h + 1].add(&row[h]);
            }
            let b = MultiPoly::var(VarId::a(h as u32 + 1));
            next[h] = next[h].add(&row[h].mul(&b));
            if h >= 1 {
                let l = MultiPoly::var(VarId::v(h as u32));
                next[h - 1] = next[h - 1].add(&row[h].mul(&l));
            }
        }
        row = next;
    }
    Ok(row[s as usize].clone())
}

/// Closed-form generating function for weighted bounded three-step paths.
pub fn motzkin_gf_closed(k: i64, r: i64, s: i64) -> Result<XRatFunc> {
    check_bounds(k, r, s)?;
    let rev = |n: u32| motzkin_p(n).reverse(n as usize);
    let (lo, hi) = (r.min(s), r.max(s));
    let num = rev(lo as u32)
        .mul(&rev((k - hi) as u32).shift_vars(&[Family::A, Family::V], (hi + 1) as u32))
        .shift_up((hi - lo) as usize);
    let prefactor = if r > s {
        let mut acc = MultiPoly::one();
        for h in (s + 1)..=r {
            acc = acc.mul(&MultiPoly::var(VarId::v(h as u32)));
        }
        acc
    } else {
        MultiPoly::one()
    };
    XRatFunc::new(num.scale(&prefactor), rev((k + 1) as u32))
}

/// Backward extension of the (weighted) bounded three-step loop sequence.
pub fn motzkin_count_negative(
    n: u64,
    k: i64,
    r: i64,
    s: i64,
    weighted: bool,
    corrected: bool,
) -> Result<MultiPoly> {
    let gf = motzkin_gf_closed(k, r, s)?;
    let gf = if weighted {
        gf
    } else {
        XRatFunc::new(
            gf.num().map(&|c| spec_ones(c, &[Family::A, Family::V])),
            gf.den().map(&|c| spec_ones(c, &[Family::A, Family::V])),
        )?
    };
    let rec = XLinRec::from_xratfunc(&gf)?;
    let rec = if corrected { rec.corrected() } else { rec };
    rec.eval(-(n as i64))
}

/// Sum over ending heights: the number of nonnegative up-down paths of
/// length n within [0, k] starting at height 0.
pub fn sum_over_endpoints(n: u64, k: i64) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for s in 0..=k {
        if (n as i64 + s) % 2 == 0 {
            acc += count_paths(n, k, 0, s)?;
        }
    }
    Ok(acc)
}

/// Closed-form generating function for `sum_over_endpoints` at bound k.
pub fn sum_gf_closed(k: i64) -> RatFunc {
    assert!(k >= 0);
    let a = chebyshev_u_rev(k / 2);
    let b = chebyshev_u_rev((k + 1) / 2);
    let c = chebyshev_u_rev((k - 1).div_euclid(2)).shift_up(1);
    let num = a.mul(&b.add(&c));
    let den = chebyshev_u_rev(k + 1);
    RatFunc::new(num, den).expect("denominator has constant term 1")
}

/// Backward extension of the endpoint-summed sequence, honoring the
/// constant-term correction when requested.
pub fn sum_negative(n: u64, k: i64, corrected: bool) -> Result<Rat> {
    let gf = sum_gf_closed(k);
    let rec = LinRec::from_ratfunc(&gf)?;
    let rec = if corrected { rec.corrected() } else { rec };
    rec.eval(-(n as i64))
}

/// The linear recurrence of the endpoint-summed sequence at bound k (exposed
/// so determinant checks can inspect the degeneracy flag and correction).
pub fn sum_linrec(k: i64) -> Result<LinRec> {
    LinRec::from_ratfunc(&sum_gf_closed(k))
}

/// Area of a loop path (start = end = 0, no level steps): the number of unit
/// rhombi that fit between the path and the minimal sawtooth path.
pub fn area(p: &UpDownPath) -> u64 {
    assert_eq!(p.start, 0);
    let h = p.heights();
    let n = h.len() as i64 - 1;
    let mut count = 0u64;
    // A rhombus centered at (x, y) occupies heights [y-1, y+1] over [x-1, x+1].
    for x in 1..n {
        for y in 1.. {
            let fits_path = h[(x - 1) as usize] >= y && h[x as usize] >= y + 1 && h[(x + 1) as usize] >= y;
            if !fits_path {
                break;
            }
            // Valid cells have their four corners on the path lattice
            // (x' + y' even); this also keeps them above the sawtooth.
            if (x + y) % 2 == 1 {
                count += 1;
            }
        }
    }
    count
}

/// Value of the weighted bounded-path sequence at an arbitrary signed index:
/// nonnegative indices via the dynamic program, negative ones via the
/// backward extension of the closed-form generating function. `corrected`
/// opts into the constant-term correction of the degenerate case (which also
/// changes the value at index 0).
pub fn path_value(
    n: i64,
    k: i64,
    r: i64,
    s: i64,
    scheme: WeightScheme,
    corrected: bool,
) -> Result<MultiPoly> {
    if n >= 0 && !corrected {
        return weighted_path_poly(n as u64, k, r, s, scheme);
    }
    let gf = path_gf_closed(k, r, s, scheme)?;
    let rec = XLinRec::from_xratfunc(&gf)?;
    let rec = if corrected { rec.corrected() } else { rec };
    rec.eval(n)
}

/// Value of the slanted-path sequence at a signed index: the member of index
/// m of the family of paths from height 0 to height h bounded by h, offset so
/// that index 0 is the shortest such path (length h).
pub fn d_value(m: i64, h: i64, scheme: WeightScheme) -> Result<MultiPoly> {
    path_value(m + h, h, 0, h, scheme, false)
}

/// Value of the endpoint-summed sequence at a signed index.
pub fn sum_value(n: i64, k: i64, corrected: bool) -> Result<Rat> {
    if n >= 0 && !corrected {
        return Ok(Rat::from_integer(sum_over_endpoints(n as u64, k)?));
    }
    let rec = LinRec::from_ratfunc(&sum_gf_closed(k))?;
    let rec = if corrected { rec.corrected() } else { rec };
    rec.eval(n)
}

/// Value of the (optionally weighted) bounded three-step path sequence at a
/// signed index.
pub fn motzkin_value(
    n: i64,
    k: i64,
    r: i64,
    s: i64,
    weighted: bool,
    corrected: bool,
) -> Result<MultiPoly> {
    if n >= 0 && !corrected {
        return if weighted {
            motzkin_weighted_poly(n as u64, k, r, s)
        } else {
            Ok(MultiPoly::constant(Rat::from_integer(motzkin_count(n as u64, k, r, s)?)))
        };
    }
    let gf = motzkin_gf_closed(k, r, s)?;
    let gf = if weighted {
        gf
    } else {
        XRatFunc::new(
            gf.num().map(&|c| spec_ones(c, &[Family::A, Family::V])),
            gf.den().map(&|c| spec_ones(c, &[Family::A, Family::V])),
        )?
    };
    let rec = XLinRec::from_xratfunc(&gf)?;
    let rec = if corrected { rec.corrected() } else { rec };
    rec.eval(n)
}

/// Converts a constant MultiPoly to a rational (all variables at 1 must not
/// occur); panics if the polynomial is non-constant.
pub fn as_constant(p: &MultiPoly) -> Rat {
    assert!(
        p.terms().iter().all(|(m, _)| m.pairs().is_empty()),
        "polynomial is not constant: {}",
        p.render()
    );
    p.constant_term()
}

/// Lifts a univariate rational-coefficient polynomial into the x-ring.
pub fn lift_ratfunc(f: &RatFunc) -> XRatFunc {
    XRatFunc::new(lift(f.num()), lift(f.den())).expect("denominator constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_paths(4, 3, 0, 0).unwrap(), big(2));
        for n in 1..=10u64 {
            assert_eq!(count_paths(2 * n, 1, 0, 0).unwrap(), big(1));
        }
        let seq: Vec<BigInt> = (0..=8).map(|n| count_paths(n, 2, 0, 0).unwrap()).collect();
        let expect: Vec<BigInt> = [1, 0, 1, 0, 2, 0, 4, 0, 8].iter().map(|&v| big(v)).collect();
        assert_eq!(seq, expect);
        // Empty path at equal endpoints counts once.
        assert_eq!(count_paths(0, 3, 2, 2).unwrap(), big(1));
    }

    #[test]
    fn parity_vanishing() {
        for n in 0..=9u64 {
            for r in 0..=3 {
                for s in 0..=3 {
                    if (n as i64 + r + s) % 2 == 1 {
                        assert_eq!(count_paths(n, 3, r, s).unwrap(), big(0));
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_small() {
        let w = weighted_path_poly(2, 1, 0, 0, WeightScheme::BScheme).unwrap();
        assert_eq!(w, MultiPoly::var(VarId::b(1)));
        let w = weighted_path_poly(4, 2, 0, 0, WeightScheme::BScheme).unwrap();
        let expect = MultiPoly::var(VarId::b(1))
            .pow(2)
            .add(&MultiPoly::var(VarId::b(1)).mul(&MultiPoly::var(VarId::b(2))));
        assert_eq!(w, expect);
        let w = weighted_path_poly(4, 2, 0, 0, WeightScheme::QArea).unwrap();
        assert_eq!(w, MultiPoly::one().add(&MultiPoly::var(VarId::q())));
    }

    #[test]
    fn closed_gf_matches_dp() {
        for k in 0..=4i64 {
            for r in 0..=k {
                for s in 0..=k {
                    let gf = path_gf_closed(k, r, s, WeightScheme::BScheme).unwrap();
                    let ser = gf.series(12);
                    for n in 0..=12u64 {
                        let dp = weighted_path_poly(n, k, r, s, WeightScheme::BScheme).unwrap();
                        assert_eq!(ser.coeff(n as usize), dp, "k={k} r={r} s={s} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn closed_gf_examples() {
        // k=1 loop: 1/(1 - x^2).
        let gf = path_gf_closed(1, 0, 0, WeightScheme::Unweighted).unwrap();
        let one = XRatFunc::new(
            XPoly::one(),
            XPoly::new(vec![MultiPoly::one(), MultiPoly::zero(), MultiPoly::int(-1)]),
        )
        .unwrap();
        assert!(gf.equals(&one));
        // k=1 loop, B weights: 1/(1 - B_1 x^2).
        let gf = path_gf_closed(1, 0, 0, WeightScheme::BScheme).unwrap();
        let expect = XRatFunc::new(
            XPoly::one(),
            XPoly::new(vec![
                MultiPoly::one(),
                MultiPoly::zero(),
                MultiPoly::var(VarId::b(1)).neg(),
            ]),
        )
        .unwrap();
        assert!(gf.equals(&expect));
    }

    #[test]
    fn negative_extension_small() {
        // Values at -2 and -4 for the bound-3 loop sequence.
        let v = path_count_negative(2, 3, 0, 0, WeightScheme::Unweighted, false).unwrap();
        assert_eq!(as_constant(&v), rat(2));
        let v = path_count_negative(4, 3, 0, 0, WeightScheme::Unweighted, false).unwrap();
        assert_eq!(as_constant(&v), rat(5));
        // Even bound is blocked without correction.
        assert!(path_count_negative(2, 2, 0, 0, WeightScheme::Unweighted, false).is_err());
        assert!(path_count_negative(2, 2, 0, 0, WeightScheme::Unweighted, true).is_ok());
    }

    #[test]
    fn motzkin_small() {
        assert_eq!(motzkin_count(3, 1, 0, 0).unwrap(), big(4));
        // Closed form vs DP, weighted.
        for k in 0..=3i64 {
            for r in 0..=k {
                for s in 0..=k {
                    let gf = motzkin_gf_closed(k, r, s).unwrap();
                    let ser = gf.series(8);
                    for n in 0..=8u64 {
                        let dp = motzkin_weighted_poly(n, k, r, s).unwrap();
                        assert_eq!(ser.coeff(n as usize), dp, "k={k} r={r} s={s} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn endpoint_sums() {
        assert_eq!(sum_over_endpoints(3, 2).unwrap(), big(2));
        assert_eq!(sum_over_endpoints(4, 4).unwrap(), big(6));
        for k in 0..=5i64 {
            let gf = sum_gf_closed(k);
            let ser = gf.series(12).unwrap();
            for n in 0..=12u64 {
                assert_eq!(
                    ser[n as usize],
                    Rat::from_integer(sum_over_endpoints(n, k).unwrap()),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn area_statistic() {
        // UUDD has one rhombus, UDUD none.
        let p = UpDownPath { start: 0, steps: vec![Step::Up, Step::Up, Step::Down, Step::Down] };
        assert_eq!(area(&p), 1);
        let p = UpDownPath { start: 0, steps: vec![Step::Up, Step::Down, Step::Up, Step::Down] };
        assert_eq!(area(&p), 0);
        // Area agrees with the q-specialized weight on an exhaustive range.
        for n in [2u64, 4, 6, 8] {
            for k in 1..=4i64 {
                for p in enumerate_paths(n, k, 0, 0, false).unwrap() {
                    let w = path_weight(&p, WeightScheme::QArea);
                    let direct =
                        MultiPoly::term(crate::multipoly::Mono::var(VarId::q(), area(&p) as i64), rat(1));
                    assert_eq!(w, direct, "path {:?}", p.steps);
                }
            }
        }
    }

    #[test]
    fn signed_index_helpers() {
        // Agreement with the forward DP and the negative-extension helper.
        for n in 0..=8i64 {
            let a = path_value(n, 3, 1, 1, WeightScheme::Unweighted, false).unwrap();
            let b = weighted_path_poly(n as u64, 3, 1, 1, WeightScheme::Unweighted).unwrap();
            assert_eq!(a, b);
        }
        for n in 1..=6u64 {
            let a = path_value(-(n as i64), 3, 0, 0, WeightScheme::Unweighted, false).unwrap();
            let b = path_count_negative(n, 3, 0, 0, WeightScheme::Unweighted, false).unwrap();
            assert_eq!(a, b);
        }
        // Slanted values: index 0 is the single all-up path.
        assert_eq!(as_constant(&d_value(0, 3, WeightScheme::Unweighted).unwrap()), rat(1));
        assert_eq!(
            d_value(2, 3, WeightScheme::Unweighted).unwrap(),
            MultiPoly::constant(Rat::from_integer(count_paths(5, 3, 0, 3).unwrap()))
        );
        // Endpoint sums at both signs.
        assert_eq!(sum_value(4, 4, false).unwrap(), Rat::from_integer(big(6)));
        assert!(sum_value(-1, 3, false).is_ok());
        // Motzkin values match both routes.
        assert_eq!(
            as_constant(&motzkin_value(3, 1, 0, 0, false, false).unwrap()),
            rat(4)
        );
        for n in 1..=5u64 {
            let a = motzkin_value(-(n as i64), 2, 0, 0, false, false).unwrap();
            let b = motzkin_count_negative(n, 2, 0, 0, false, false).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn reflection_symmetry() {
        for n in 0..=8u64 {
            for r in 0..=3 {
                for s in 0..=3 {
                    assert_eq!(
                        count_paths(n, 3, r, s).unwrap(),
                        count_paths(n, 3, s, r).unwrap()
                    );
                }
            }
        }
    }
}
