//! Bounded alternating sequences: direct enumeration, the A/V weight
//! statistic, and closed-form generating functions for fixed endpoints, for
//! endpoint sums, and for the cumulative series over all lengths.
//!
//! An alternating sequence of length n with entries in [1, k] is a tuple
//! (a_1, ..., a_n) with a_1 <= a_2 >= a_3 <= a_4 >= ... . Its A/V weight is
//! the product of V_{a_i} over odd positions i and A_{a_i} over even
//! positions. Fixed-endpoint families require a_1 = r and a_n = s; a
//! length-1 sequence exists exactly when r = s.

use crate::error::{Error, Result};
use crate::exact::{RatFunc, UniPoly};
use crate::multipoly::{MultiPoly, VarId, XRatFunc};
use crate::orthopoly::{chebyshev_u_half, poly_q, rav, tav};
use num::bigint::BigInt;
use num::{One, Zero};

/// An alternating sequence; entries are the full tuple a_1..a_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltSeq {
    /// The entries a_1..a_n.
    pub entries: Vec<i64>,
}

impl AltSeq {
    /// True when the entries lie in [1, k] and alternate
    /// a_1 <= a_2 >= a_3 <= ... .
    pub fn valid(&self, k: i64) -> bool {
        if !self.entries.iter().all(|&a| (1..=k).contains(&a)) {
            return false;
        }
        self.entries.windows(2).enumerate().all(|(i, w)| {
            if i % 2 == 0 {
                w[0] <= w[1]
            } else {
                w[0] >= w[1]
            }
        })
    }

    /// The A/V weight: V_{a_i} for odd positions i, A_{a_i} for even ones.
    pub fn weight(&self) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for (i, &a) in self.entries.iter().enumerate() {
            let v = if i % 2 == 0 {
                VarId::v(a as u32)
            } else {
                VarId::a(a as u32)
            };
            acc = acc.mul(&MultiPoly::var(v));
        }
        acc
    }
}

fn check_bounds(k: i64, r: i64, s: i64) -> Result<()> {
    if k < 1 || !(1..=k).contains(&r) || !(1..=k).contains(&s) {
        return Err(Error::BoundViolation(format!("need 1 <= r,s <= k, got k={k} r={r} s={s}")));
    }
    Ok(())
}

/// Generic DP over alternating sequences of length n from r to s in [1, k].
/// `weight(position, value)` supplies the per-entry factor (positions from 1).
fn alt_dp<T, F>(n: u64, k: i64, r: i64, s: i64, zero: T, one: T, weight: F) -> Result<T>
where
    T: Clone,
    F: Fn(u64, i64) -> T,
    T: AddMul,
{
    check_bounds(k, r, s)?;
    if n == 0 {
        return Err(Error::BoundViolation("alternating sequences have length >= 1".into()));
    }
    if n == 1 {
        return Ok(if r == s { one.mulled(&weight(1, r)) } else { zero });
    }
    // row[v] = weighted count of prefixes a_1..a_i ending at value v+1.
    let mut row = vec![zero.clone(); k as usize];
    row[(r - 1) as usize] = one.mulled(&weight(1, r));
    for i in 2..=n {
        let mut next = vec![zero.clone(); k as usize];
        // a_{i-1} <= a_i when i is even, a_{i-1} >= a_i when i is odd.
        for v in 1..=k {
            let range: Box<dyn Iterator<Item = i64>> =
                if i % 2 == 0 { Box::new(1..=v) } else { Box::new(v..=k) };
            let mut acc = zero.clone();
            for prev in range {
                acc = acc.added(&row[(prev - 1) as usize]);
            }
            next[(v - 1) as usize] = acc.mulled(&weight(i, v));
        }
        row = next;
    }
    Ok(row[(s - 1) as usize].clone())
}

/// Minimal ring interface for the DP above.
trait AddMul: Sized {
    fn added(&self, other: &Self) -> Self;
    fn mulled(&self, other: &Self) -> Self;
}

impl AddMul for BigInt {
    fn added(&self, other: &Self) -> Self {
        self + other
    }
    fn mulled(&self, other: &Self) -> Self {
        self * other
    }
}

impl AddMul for MultiPoly {
    fn added(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mulled(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

/// Number of alternating sequences of length n from r to s with entries in
/// [1, k].
pub fn count_altseq(n: u64, k: i64, r: i64, s: i64) -> Result<BigInt> {
    alt_dp(n, k, r, s, BigInt::zero(), BigInt::one(), |_, _| BigInt::one())
}

/// A/V-weighted sum over alternating sequences of length n from r to s.
pub fn weighted_altseq_poly(n: u64, k: i64, r: i64, s: i64) -> Result<MultiPoly> {
    alt_dp(n, k, r, s, MultiPoly::zero(), MultiPoly::one(), |i, v| {
        MultiPoly::var(if i % 2 == 1 { VarId::v(v as u32) } else { VarId::a(v as u32) })
    })
}

/// Exhaustive list of alternating sequences of length n from r to s.
pub fn enumerate_altseq(n: u64, k: i64, r: i64, s: i64) -> Result<Vec<AltSeq>> {
    check_bounds(k, r, s)?;
    if n == 0 {
        return Err(Error::BoundViolation("alternating sequences have length >= 1".into()));
    }
    if n == 1 {
        return Ok(if r == s { vec![AltSeq { entries: vec![r] }] } else { vec![] });
    }
    let mut out = Vec::new();
    let mut cur = vec![r];
    fn rec(cur: &mut Vec<i64>, n: u64, k: i64, s: i64, out: &mut Vec<AltSeq>) {
        let i = cur.len() as u64 + 1; // position being filled
        let last = *cur.last().unwrap();
        let values: Box<dyn Iterator<Item = i64>> =
            if i % 2 == 0 { Box::new(last..=k) } else { Box::new(1..=last) };
        for v in values {
            if i == n {
                if v == s {
                    cur.push(v);
                    out.push(AltSeq { entries: cur.clone() });
                    cur.pop();
                }
            } else {
                cur.push(v);
                rec(cur, n, k, s, out);
                cur.pop();
            }
        }
    }
    rec(&mut cur, n, k, s, &mut out);
    Ok(out)
}

/// Total number of alternating sequences of length n with entries in [1, k],
/// over all endpoints. Lengths -1 and 0 both count the empty sequence once.
pub fn count_all(n: i64, k: i64) -> Result<BigInt> {
    if n == -1 || n == 0 {
        return Ok(BigInt::one());
    }
    if n < -1 {
        return Err(Error::BoundViolation(format!("length {n} not defined")));
    }
    let mut acc = BigInt::zero();
    for r in 1..=k {
        for s in 1..=k {
            acc += count_altseq(n as u64, k, r, s)?;
        }
    }
    Ok(acc)
}

/// A/V-weighted version of [`count_all`] for positive lengths.
pub fn weighted_all(n: u64, k: i64) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero();
    for r in 1..=k {
        for s in 1..=k {
            acc = acc.add(&weighted_altseq_poly(n, k, r, s)?);
        }
    }
    Ok(acc)
}

/// Closed-form generating function for odd lengths with fixed endpoints: the
/// coefficient of x^{2n} is the number of alternating sequences of length
/// 2n+1 from r to s in [1, k].
pub fn altseq_gf_odd(k: i64, r: i64, s: i64) -> Result<RatFunc> {
    check_bounds(k, r, s)?;
    let u = chebyshev_u_half;
    let den = u(2 * k);
    let sign = |v: i64| if v % 2 == 0 { 1 } else { -1 };
    if r == s {
        let num = den.sub(&u(2 * r - 2).mul(&u(2 * k + 1 - 2 * r)).shift_up(1));
        return RatFunc::new(num, den);
    }
    let (lo, hi) = (r.min(s), r.max(s));
    let num = u(2 * lo - 2)
        .mul(&u(2 * k + 1 - 2 * hi))
        .shift_up(1)
        .scale(&crate::exact::rat(sign(r + s + 1)));
    RatFunc::new(num, den)
}

/// Closed-form generating function for even lengths with fixed endpoints:
/// the coefficient of x^{2n+1} is the number of alternating sequences of
/// length 2n+2 from r to s in [1, k].
pub fn altseq_gf_even(k: i64, r: i64, s: i64) -> Result<RatFunc> {
    check_bounds(k, r, s)?;
    let u = chebyshev_u_half;
    let den = u(2 * k);
    let sign = crate::exact::rat(if (r + s + 1) % 2 == 0 { 1 } else { -1 });
    let num = if r <= s {
        u(2 * r - 2).mul(&u(2 * k - 2 * s))
    } else {
        u(2 * s - 1).mul(&u(2 * k - 2 * r + 1))
    };
    RatFunc::new(num.shift_up(1).scale(&sign), den)
}

/// Generating function for all odd lengths: the coefficient of x^{2n} is the
/// total number of alternating sequences of length 2n-1 (n >= 1).
pub fn altseq_gf_all_odd(k: i64) -> RatFunc {
    let num = chebyshev_u_half(2 * k - 1).shift_up(1).neg();
    RatFunc::new(num, chebyshev_u_half(2 * k)).expect("nonzero denominator")
}

/// Generating function for all even lengths: the coefficient of x^{2n+1} is
/// the total number of alternating sequences of length 2n (n >= 0).
pub fn altseq_gf_all_even(k: i64) -> RatFunc {
    let sign = crate::exact::rat(if k % 2 == 0 { 1 } else { -1 });
    RatFunc::new(UniPoly::x().scale(&sign), chebyshev_u_half(2 * k)).expect("nonzero denominator")
}

/// The cumulative generating function 1 + sum_{n>=0} |all length-n
/// sequences| x^{n+1}, in the compact two-term Chebyshev form.
pub fn cumulative_gf(k: i64) -> RatFunc {
    assert!(k >= 1);
    let u = |n: i64| chebyshev_u_half(n);
    let sgn = if k % 2 == 0 { 1 } else { -1 };
    let num = u(k - 2).add(&u(k - 3).scale(&crate::exact::rat(sgn))).neg();
    let den = u(k).add(&u(k - 1).scale(&crate::exact::rat(sgn)));
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// Applies the index reflection followed by an index shift to Q_{2k+1-2t},
/// the combination appearing in the odd-length weighted closed forms.
fn shifted_reflected_q(k: i64, t: i64) -> crate::multipoly::XPoly {
    let q = poly_q((2 * k + 1 - 2 * t) as u32);
    let refl = rav(&q, (k - t + 1) as u32);
    tav(&refl, (t - 1) as u32)
}

/// A/V-weighted closed-form generating function for odd lengths: the
/// coefficient of x^{2n} is the weighted sum over sequences of length 2n+1
/// from r to s.
pub fn altseq_gf_weighted_odd(k: i64, r: i64, s: i64) -> Result<XRatFunc> {
    check_bounds(k, r, s)?;
    let den = poly_q((2 * k) as u32);
    let vr = MultiPoly::var(VarId::v(r as u32));
    let vs = MultiPoly::var(VarId::v(s as u32));
    let sign = MultiPoly::int(if (r + s + 1) % 2 == 0 { 1 } else { -1 });
    if r == s {
        let tail =
            poly_q((2 * r - 2) as u32).mul(&shifted_reflected_q(k, r)).shift_up(1);
        let num = den.scale(&vr).sub(&tail.scale(&vr.mul(&vr)));
        return XRatFunc::new(num, den);
    }
    let (lo, hi) = (r.min(s), r.max(s));
    let num = poly_q((2 * lo - 2) as u32)
        .mul(&shifted_reflected_q(k, hi))
        .shift_up(1)
        .scale(&sign.mul(&vr).mul(&vs));
    XRatFunc::new(num, den)
}

/// A/V-weighted closed-form generating function for even lengths: the
/// coefficient of x^{2n+1} is the weighted sum over sequences of length
/// 2n+2 from r to s.
pub fn altseq_gf_weighted_even(k: i64, r: i64, s: i64) -> Result<XRatFunc> {
    check_bounds(k, r, s)?;
    let den = poly_q((2 * k) as u32);
    let vr = MultiPoly::var(VarId::v(r as u32));
    let as_ = MultiPoly::var(VarId::a(s as u32));
    let sign = MultiPoly::int(if (r + s + 1) % 2 == 0 { 1 } else { -1 });
    let num = if r <= s {
        poly_q((2 * r - 2) as u32).mul(&tav(&poly_q((2 * k - 2 * s) as u32), s as u32))
    } else {
        poly_q((2 * s - 1) as u32).mul(&shifted_reflected_q(k, r))
    };
    XRatFunc::new(num.shift_up(1).scale(&sign.mul(&vr).mul(&as_)), den)
}

/// Weighted analogue of [`altseq_gf_all_odd`]: coefficient of x^{2n} is the
/// weighted total over sequences of length 2n-1 (n >= 1).
pub fn altseq_gf_weighted_all_odd(k: i64) -> XRatFunc {
    assert!(k >= 1);
    let num = poly_q((2 * k - 1) as u32).shift_up(1).neg();
    XRatFunc::new(num, poly_q((2 * k) as u32)).expect("denominator unit constant term")
}

/// Weighted analogue of [`altseq_gf_all_even`]: coefficient of x^{2n+1} is
/// the weighted total over sequences of length 2n (n >= 0).
pub fn altseq_gf_weighted_all_even(k: i64) -> XRatFunc {
    assert!(k >= 1);
    use crate::multipoly::XPoly;
    let sign = MultiPoly::int(if k % 2 == 0 { 1 } else { -1 });
    let num = XPoly::x().scale(&sign);
    XRatFunc::new(num, poly_q((2 * k) as u32)).expect("denominator unit constant term")
}
