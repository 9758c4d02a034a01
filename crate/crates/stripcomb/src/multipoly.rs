//! Sparse multivariate Laurent polynomials over the rationals in the indexed
//! variable families `A_i`, `V_i`, `B_i` and the loose variables `q`, `y`,
//! together with index-shift and index-reflection operators, specialization
//! maps, and polynomials/rational functions/series in a formal variable `x`
//! with such coefficients.

use crate::error::{Error, Result};
use crate::exact::{rat, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Variable family. The declaration order fixes the canonical variable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Loose variable q.
    Q,
    /// Loose variable y.
    Y,
    /// Indexed family A_i.
    A,
    /// Indexed family V_i.
    V,
    /// Indexed family B_i.
    B,
}

/// A concrete variable: a family plus an index (1 for the loose variables).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    /// Variable family.
    pub family: Family,
    /// Index within the family; always 1 for `Q` and `Y`.
    pub index: u32,
}

impl VarId {
    /// The loose variable q.
    pub fn q() -> Self {
        VarId { family: Family::Q, index: 1 }
    }
    /// The loose variable y.
    pub fn y() -> Self {
        VarId { family: Family::Y, index: 1 }
    }
    /// A_i (i ≥ 1).
    pub fn a(i: u32) -> Self {
        assert!(i >= 1);
        VarId { family: Family::A, index: i }
    }
    /// V_i (i ≥ 1).
    pub fn v(i: u32) -> Self {
        assert!(i >= 1);
        VarId { family: Family::V, index: i }
    }
    /// B_i (i ≥ 1).
    pub fn b(i: u32) -> Self {
        assert!(i >= 1);
        VarId { family: Family::B, index: i }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Q => write!(f, "q"),
            Family::Y => write!(f, "y"),
            Family::A => write!(f, "A{}", self.index),
            Family::V => write!(f, "V{}", self.index),
            Family::B => write!(f, "B{}", self.index),
        }
    }
}

/// A Laurent monomial: sorted sparse exponent vector without zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(Vec<(VarId, i64)>);

impl Mono {
    /// The empty (constant) monomial.
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    /// A single variable to a power.
    pub fn var(v: VarId, e: i64) -> Self {
        if e == 0 {
            Mono::one()
        } else {
            Mono(vec![(v, e)])
        }
    }

    /// Builds from arbitrary (variable, exponent) pairs, combining repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, i64)>) -> Self {
        let mut map: BTreeMap<VarId, i64> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Mono(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Mono) -> Mono {
        Mono::from_pairs(self.0.iter().chain(other.0.iter()).cloned())
    }

    /// Inverse monomial (exponents negate).
    pub fn inv(&self) -> Mono {
        Mono(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    /// Power of a monomial.
    pub fn pow(&self, k: i64) -> Mono {
        Mono(self.0.iter().map(|&(v, e)| (v, e * k)).filter(|&(_, e)| e != 0).collect())
    }

    /// Exponent pairs.
    pub fn pairs(&self) -> &[(VarId, i64)] {
        &self.0
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate Laurent polynomial with rational coefficients.
/// Terms are kept sorted by monomial; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: Vec<(Mono, Rat)>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        MultiPoly { terms: vec![] }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        MultiPoly::constant(rat(1))
    }

    /// A rational constant.
    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            MultiPoly::zero()
        } else {
            MultiPoly { terms: vec![(Mono::one(), c)] }
        }
    }

    /// An integer constant.
    pub fn int(n: i64) -> Self {
        MultiPoly::constant(rat(n))
    }

    /// A single variable.
    pub fn var(v: VarId) -> Self {
        MultiPoly { terms: vec![(Mono::var(v, 1), rat(1))] }
    }

    /// A single monomial term.
    pub fn term(m: Mono, c: Rat) -> Self {
        if c.is_zero() {
            MultiPoly::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds from unsorted terms, combining and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, Rat)>) -> Self {
        let mut map: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (m, c) in terms {
            let e = map.entry(m).or_insert_with(Rat::zero);
            *e += c;
        }
        MultiPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// The sorted term list.
    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::one() && self.terms[0].1.is_one()
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .iter()
            .find(|(m, _)| m.pairs().is_empty())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Sum.
    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().chain(other.terms.iter()).cloned())
    }

    /// Difference.
    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    /// Product.
    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let mut map: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let e = map.entry(m).or_insert_with(Rat::zero);
                *e += c1 * c2;
            }
        }
        MultiPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Nonnegative power.
    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// True when the polynomial is a single term (hence invertible in the
    /// Laurent ring).
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// Inverse of a unit (single-term) polynomial.
    pub fn invert_unit(&self) -> Result<MultiPoly> {
        if self.terms.len() != 1 {
            return Err(Error::NonUnitFactor);
        }
        let (m, c) = &self.terms[0];
        Ok(MultiPoly::term(m.inv(), Rat::one() / c.clone()))
    }

    /// Integer power of a unit, allowing negative exponents.
    pub fn unit_pow(&self, k: i64) -> Result<MultiPoly> {
        if k >= 0 {
            return Ok(self.pow(k as u32));
        }
        Ok(self.invert_unit()?.pow((-k) as u32))
    }

    /// Applies a per-variable substitution. Each variable occurring in the
    /// polynomial is replaced by `rule(var)`; variables mapped to `None` are
    /// left in place. Substituting into a negative exponent requires the
    /// replacement to be a unit.
    pub fn substitute(&self, rule: &dyn Fn(VarId) -> Option<MultiPoly>) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = MultiPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                let factor = match rule(v) {
                    Some(p) => {
                        if e >= 0 {
                            p.pow(e as u32)
                        } else {
                            p.unit_pow(e)?
                        }
                    }
                    None => MultiPoly::term(Mono::var(v, e), Rat::one()),
                };
                acc = acc.mul(&factor);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Increments the index of every variable in the given families.
    pub fn shift(&self, families: &[Family]) -> MultiPoly {
        let map = |m: &Mono| {
            Mono::from_pairs(m.pairs().iter().map(|&(v, e)| {
                if families.contains(&v.family) {
                    (VarId { family: v.family, index: v.index + 1 }, e)
                } else {
                    (v, e)
                }
            }))
        };
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (map(m), c.clone())))
    }

    /// Applies the shift `n` times.
    pub fn shift_n(&self, families: &[Family], n: u32) -> MultiPoly {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.shift(families);
        }
        p
    }

    /// Index reflection: A_i -> V_{j+1-i} and V_i -> A_{j+1-i}. Every A/V
    /// index present must lie in [1, j].
    pub fn reflect(&self, j: u32) -> Result<MultiPoly> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut pairs = Vec::with_capacity(m.pairs().len());
            for &(v, e) in m.pairs() {
                let nv = match v.family {
                    Family::A | Family::V => {
                        if v.index < 1 || v.index > j {
                            return Err(Error::IndexOutOfRange);
                        }
                        let family = if v.family == Family::A { Family::V } else { Family::A };
                        VarId { family, index: j + 1 - v.index }
                    }
                    _ => v,
                };
                pairs.push((nv, e));
            }
            out.push((Mono::from_pairs(pairs), c.clone()));
        }
        Ok(MultiPoly::from_terms(out))
    }

    /// Sets every variable to 1.
    pub fn eval_all_ones(&self) -> Rat {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }

    /// Canonical text rendering with deterministic term order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff_one = abs.is_one();
            let const_mono = m.pairs().is_empty();
            if const_mono {
                s.push_str(&abs.to_string());
            } else if coeff_one {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&format!("{abs}*{m}"));
            }
        }
        s
    }
}

/// The three-case product convention: for bounds (r, s) the product is
/// over i in [r, s-1] when r < s, empty (= 1) when r = s, and the inverse
/// of the product over i in [s, r-1] when r > s. Factors must be units.
pub fn extended_product(r: i64, s: i64, factor: &dyn Fn(i64) -> MultiPoly) -> Result<MultiPoly> {
    let mut acc = MultiPoly::one();
    if r < s {
        for i in r..s {
            let f = factor(i);
            if !f.is_unit() {
                return Err(Error::NonUnitFactor);
            }
            acc = acc.mul(&f);
        }
    } else if r > s {
        for i in s..r {
            acc = acc.mul(&factor(i).invert_unit()?);
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Canned specializations
// ---------------------------------------------------------------------------

/// B_{2i-1} -> A_i^{-1} V_i^{-1} and B_{2i} -> A_i^{-1} V_{i+1}^{-1}.
pub fn spec_b_to_av(p: &MultiPoly) -> MultiPoly {
    p.substitute(&|v| {
        if v.family == Family::B {
            let i = (v.index + 1) / 2;
            let pairs = if v.index % 2 == 1 {
                vec![(VarId::a(i), -1), (VarId::v(i), -1)]
            } else {
                vec![(VarId::a(i), -1), (VarId::v(i + 1), -1)]
            };
            Some(MultiPoly::term(Mono::from_pairs(pairs), Rat::one()))
        } else {
            None
        }
    })
    .expect("unit substitution")
}

/// B_i -> q^{i-1} (the area specialization).
pub fn spec_b_area(p: &MultiPoly) -> MultiPoly {
    p.substitute(&|v| {
        if v.family == Family::B {
            Some(MultiPoly::term(Mono::var(VarId::q(), (v.index - 1) as i64), Rat::one()))
        } else {
            None
        }
    })
    .expect("unit substitution")
}

/// A_i -> (y q)^i and V_i -> y^{-i} (the polyomino specialization).
pub fn spec_av_to_qy(p: &MultiPoly) -> MultiPoly {
    p.substitute(&|v| match v.family {
        Family::A => Some(MultiPoly::term(
            Mono::from_pairs(vec![(VarId::y(), v.index as i64), (VarId::q(), v.index as i64)]),
            Rat::one(),
        )),
        Family::V => {
            Some(MultiPoly::term(Mono::var(VarId::y(), -(v.index as i64)), Rat::one()))
        }
        _ => None,
    })
    .expect("unit substitution")
}

/// A_i -> q^{-i+1} and V_i -> q^{-i+1} (turns the inverse-pair weight into
/// the inverse area weight).
pub fn spec_av_to_qinv(p: &MultiPoly) -> MultiPoly {
    p.substitute(&|v| match v.family {
        Family::A | Family::V => {
            Some(MultiPoly::term(Mono::var(VarId::q(), 1 - v.index as i64), Rat::one()))
        }
        _ => None,
    })
    .expect("unit substitution")
}

/// Sets the variables of the given families to 1.
pub fn spec_ones(p: &MultiPoly, families: &[Family]) -> MultiPoly {
    p.substitute(&|v| {
        if families.contains(&v.family) {
            Some(MultiPoly::one())
        } else {
            None
        }
    })
    .expect("unit substitution")
}

// ---------------------------------------------------------------------------
// Polynomials / rational functions / series in x over MultiPoly
// ---------------------------------------------------------------------------

/// Dense polynomial in the formal variable x with MultiPoly coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    coeffs: Vec<MultiPoly>,
}

impl XPoly {
    /// Builds from coefficients (index = power of x), trimming zeros.
    pub fn new(mut coeffs: Vec<MultiPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        XPoly { coeffs: vec![] }
    }

    /// The constant 1.
    pub fn one() -> Self {
        XPoly::constant(MultiPoly::one())
    }

    /// A constant polynomial.
    pub fn constant(c: MultiPoly) -> Self {
        XPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        XPoly::new(vec![MultiPoly::zero(), MultiPoly::one()])
    }

    /// c·x^d.
    pub fn monomial(c: MultiPoly, d: usize) -> Self {
        let mut coeffs = vec![MultiPoly::zero(); d + 1];
        coeffs[d] = c;
        XPoly::new(coeffs)
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in x; -1 for zero.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Coefficient of x^d.
    pub fn coeff(&self, d: usize) -> MultiPoly {
        self.coeffs.get(d).cloned().unwrap_or_else(MultiPoly::zero)
    }

    /// Coefficient slice.
    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Leading coefficient.
    pub fn leading(&self) -> MultiPoly {
        self.coeffs.last().cloned().unwrap_or_else(MultiPoly::zero)
    }

    /// Sum.
    pub fn add(&self, other: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        XPoly::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    /// Difference.
    pub fn sub(&self, other: &XPoly) -> XPoly {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> XPoly {
        XPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    /// Product.
    pub fn mul(&self, other: &XPoly) -> XPoly {
        if self.is_zero() || other.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![MultiPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        XPoly::new(coeffs)
    }

    /// Multiplication by a MultiPoly scalar.
    pub fn scale(&self, c: &MultiPoly) -> XPoly {
        XPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplication by x^d.
    pub fn shift_up(&self, d: usize) -> XPoly {
        if self.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![MultiPoly::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly::new(coeffs)
    }

    /// Reversal against a declared degree d: x^d · p(1/x). Requires d ≥ deg p.
    pub fn reverse(&self, d: usize) -> XPoly {
        assert!(self.degree() <= d as i64, "reversal degree too small");
        let mut coeffs = vec![MultiPoly::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        XPoly::new(coeffs)
    }

    /// Applies a coefficientwise map.
    pub fn map(&self, f: &dyn Fn(&MultiPoly) -> MultiPoly) -> XPoly {
        XPoly::new(self.coeffs.iter().map(|c| f(c)).collect())
    }

    /// Coefficientwise index shift.
    pub fn shift_vars(&self, families: &[Family], n: u32) -> XPoly {
        self.map(&|c| c.shift_n(families, n))
    }

    /// Coefficientwise index reflection.
    pub fn reflect_vars(&self, j: u32) -> Result<XPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.reflect(j)?);
        }
        Ok(XPoly::new(coeffs))
    }
}

/// Rational function in x over the MultiPoly coefficient ring, normalized so
/// the denominator has constant coefficient 1. Equality testing is by cross
/// multiplication only.
#[derive(Debug, Clone)]
pub struct XRatFunc {
    num: XPoly,
    den: XPoly,
}

impl XRatFunc {
    /// Builds and normalizes. The denominator's constant coefficient must be
    /// a unit in the Laurent ring.
    pub fn new(num: XPoly, den: XPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c0 = den.coeff(0);
        if c0.is_zero() {
            return Err(Error::DenominatorVanishesAtZero);
        }
        if c0.is_one() {
            return Ok(XRatFunc { num, den });
        }
        let inv = c0.invert_unit()?;
        Ok(XRatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    /// A polynomial as a rational function.
    pub fn from_poly(p: XPoly) -> Self {
        XRatFunc { num: p, den: XPoly::one() }
    }

    /// Numerator.
    pub fn num(&self) -> &XPoly {
        &self.num
    }

    /// Denominator.
    pub fn den(&self) -> &XPoly {
        &self.den
    }

    /// Sum.
    pub fn add(&self, other: &XRatFunc) -> XRatFunc {
        XRatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("denominator constant term stays a unit")
    }

    /// Difference.
    pub fn sub(&self, other: &XRatFunc) -> XRatFunc {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> XRatFunc {
        XRatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    /// Product.
    pub fn mul(&self, other: &XRatFunc) -> XRatFunc {
        XRatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("denominator constant term stays a unit")
    }

    /// Scales by a MultiPoly factor.
    pub fn scale(&self, c: &MultiPoly) -> XRatFunc {
        XRatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Equality by cross multiplication.
    pub fn equals(&self, other: &XRatFunc) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Truncated power series to the given order (inclusive).
    pub fn series(&self, order: usize) -> XSeries {
        let d0 = self.den.coeff(0);
        debug_assert!(d0.is_one());
        let mut coeffs: Vec<MultiPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for i in 1..=n {
                let di = self.den.coeff(i);
                if !di.is_zero() {
                    acc = acc.sub(&di.mul(&coeffs[n - i]));
                }
            }
            coeffs.push(acc);
        }
        XSeries { order, coeffs }
    }
}

/// Truncated power series in x with MultiPoly coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSeries {
    /// Inclusive truncation order.
    pub order: usize,
    /// Coefficients 0..=order.
    pub coeffs: Vec<MultiPoly>,
}

impl XSeries {
    /// Coefficient of x^n.
    pub fn coeff(&self, n: usize) -> MultiPoly {
        self.coeffs.get(n).cloned().unwrap_or_else(MultiPoly::zero)
    }
}

/// Linear recurrence with MultiPoly coefficients, read off an XRatFunc with
/// denominator constant coefficient 1. Supports forward and backward
/// evaluation; backward steps require the trailing denominator coefficient to
/// be a unit.
#[derive(Debug, Clone)]
pub struct XLinRec {
    order: usize,
    coeffs: Vec<MultiPoly>,
    initial: Vec<MultiPoly>,
    special: Option<MultiPoly>,
}

impl XLinRec {
    /// Reads the recurrence off a proper rational function.
    pub fn from_xratfunc(f: &XRatFunc) -> Result<Self> {
        let p = f.num().degree();
        let q = f.den().degree();
        if p > q {
            return Err(Error::NotProper);
        }
        let order = q.max(0) as usize;
        let coeffs: Vec<MultiPoly> = (1..=order).map(|i| f.den().coeff(i).neg()).collect();
        let special = if p == q && p >= 0 {
            // lead(num)/lead(den): requires the denominator's leading
            // coefficient to be a unit.
            let c = f.num().leading().mul(&f.den().leading().invert_unit()?);
            Some(c)
        } else {
            None
        };
        let extra = if special.is_some() { 1 } else { 0 };
        let initial = f.series(order + extra).coeffs;
        Ok(XLinRec { order, coeffs, initial, special })
    }

    /// True when the constant term does not satisfy the recurrence.
    pub fn has_special_constant(&self) -> bool {
        self.special.is_some()
    }

    /// The correction to subtract from the constant term.
    pub fn correction(&self) -> Option<&MultiPoly> {
        self.special.as_ref()
    }

    /// Corrected, fully bidirectional recurrence.
    pub fn corrected(&self) -> XLinRec {
        match &self.special {
            None => self.clone(),
            Some(c) => {
                let mut initial = self.initial.clone();
                initial[0] = initial[0].sub(c);
                XLinRec { order: self.order, coeffs: self.coeffs.clone(), initial, special: None }
            }
        }
    }

    /// Evaluates the extension at an arbitrary index.
    pub fn eval(&self, n: i64) -> Result<MultiPoly> {
        if n >= 0 && (n as usize) < self.initial.len() {
            return Ok(self.initial[n as usize].clone());
        }
        if self.order == 0 {
            return if n >= 0 {
                Ok(MultiPoly::zero())
            } else {
                Err(Error::NonExtendable("zero-order recurrence".into()))
            };
        }
        if n >= 0 {
            let mut window = self.initial.clone();
            for m in window.len()..=(n as usize) {
                let mut acc = MultiPoly::zero();
                for (i, c) in self.coeffs.iter().enumerate() {
                    acc = acc.add(&c.mul(&window[m - i - 1]));
                }
                window.push(acc);
            }
            return Ok(window[n as usize].clone());
        }
        if self.special.is_some() {
            return Err(Error::NonExtendable(
                "constant term does not satisfy the recurrence; apply corrected() first".into(),
            ));
        }
        let cd = &self.coeffs[self.order - 1];
        let cd_inv = cd
            .invert_unit()
            .map_err(|_| Error::NonExtendable("trailing coefficient is not a unit".into()))?;
        let mut window: Vec<MultiPoly> = self.initial[..self.order].to_vec();
        let mut m: i64 = 0;
        while m > n {
            let mut acc = window[self.order - 1].clone();
            for (i, c) in self.coeffs.iter().enumerate().take(self.order - 1) {
                acc = acc.sub(&c.mul(&window[self.order - 2 - i]));
            }
            let prev = acc.mul(&cd_inv);
            window.pop();
            window.insert(0, prev);
            m -= 1;
        }
        Ok(window[0].clone())
    }
}
