use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept in a map ordered by the graded monomial order of
/// [`Monomial`], and zero coefficients are never stored, so two polynomials
/// are equal exactly when their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> LaurentPoly {
        LaurentPoly::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::var(v))
    }

    pub fn var_pow(v: Var, e: i32) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::var_pow(v, e))
    }

    pub fn monomial(m: Monomial) -> LaurentPoly {
        LaurentPoly::term(1, m)
    }

    pub fn term<C: Into<BigInt>>(c: C, m: Monomial) -> LaurentPoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        if m.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> LaurentPoly {
        let c = c.into();
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * &c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Product of an iterator of polynomials; the empty product is 1.
    pub fn product<I: IntoIterator<Item = LaurentPoly>>(it: I) -> LaurentPoly {
        it.into_iter().fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }

    /// Componentwise minimum exponent over all terms; `1` for the zero polynomial.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.min_with(m)),
        }
    }

    /// Variables that occur with a nonzero exponent, in registry order.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.terms.keys().flat_map(|m| m.vars()).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Highest exponent of `v` among the terms, `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// Coefficient of `v^e`, viewing `self` as a Laurent polynomial in `v`
    /// over the remaining variables.
    pub fn coefficient_in(&self, v: Var, e: i32) -> LaurentPoly {
        let strip = Monomial::var_pow(v, e);
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == e)
                .map(|(m, c)| (m.div(&strip), c.clone())),
        )
    }

    /// Replaces each assigned variable by its target monomial.
    ///
    /// A variable with exponent `e` becomes `target^e`; unassigned variables
    /// pass through. The result is a ring homomorphism image of `self`.
    pub fn substitute(&self, assignments: &HashMap<Var, Monomial>) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut image = Monomial::one();
            for (v, e) in m.iter() {
                match assignments.get(&v) {
                    Some(target) => image = image.mul(&target.pow(e)),
                    None => image = image.mul(&Monomial::var_pow(v, e)),
                }
            }
            out.add_term(image, c.clone());
        }
        out
    }

    /// Convenience wrapper for a single assignment.
    pub fn substitute_one(&self, v: Var, target: Monomial) -> LaurentPoly {
        let mut map = HashMap::with_capacity(1);
        map.insert(v, target);
        self.substitute(&map)
    }

    /// Sets `v := 0`. Terms with a positive power of `v` vanish.
    pub fn set_zero(&self, v: Var) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            match m.exponent(v) {
                0 => out.add_term(m.clone(), c.clone()),
                e if e > 0 => {}
                _ => {
                    return Err(Error::NegativeExponentAtZero { var: v.to_string() });
                }
            }
        }
        Ok(out)
    }

    /// Sum of coefficients, i.e. the value with every variable set to 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when no coefficient is negative.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Both operands are first shifted by monomials so that every exponent is
    /// non-negative and `den` has no monomial factor; ordinary multivariate
    /// long division is then run under the graded order of [`Monomial`] and the
    /// shift is undone on the quotient. Any remainder is an error.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let den_shift = den.min_monomial();
        let num_shift = self.min_monomial();
        let d = den.mul_monomial(&den_shift.inverse());
        let mut rem = self.mul_monomial(&num_shift.inverse());

        let not_divisible = || Error::NotDivisible {
            numerator: self.to_string(),
            denominator: den.to_string(),
        };

        let (lead_m, lead_c) = d
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut quotient = LaurentPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if !lead_m.divides(rm) {
                return Err(not_divisible());
            }
            if !(rc % &lead_c).is_zero() {
                return Err(not_divisible());
            }
            let qm = rm.div(&lead_m);
            let qc = rc / &lead_c;
            for (dm, dc) in d.terms() {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient.mul_monomial(&num_shift.div(&den_shift)))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::monomial(m)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$f(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Canonical text: terms in ascending monomial order, e.g. `1 - q^2`,
/// `x1^2*x2 + x1*x2^2`, `-3*x1^-1*t2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::var(Var::x(i))
    }

    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn difference_of_squares() {
        let p = (&one() + &x(1)) * (&one() - &x(1));
        assert_eq!(p, &one() - &x(1).pow(2));
        assert_eq!(p.to_string(), "1 - x1^2");
    }

    #[test]
    fn additive_identity() {
        let p = &x(1) + &x(2).pow(3);
        assert_eq!(&p + &LaurentPoly::zero(), p);
    }

    #[test]
    fn laurent_exponent_cancellation() {
        let a = LaurentPoly::monomial(Monomial::from_pairs([(Var::x(1), 1), (Var::x(2), -1)]));
        assert_eq!(&a * &x(2), x(1));
    }

    #[test]
    fn exact_div_geometric_factor() {
        let num = &one() - &q().pow(2);
        let den = &one() - &q();
        assert_eq!(num.exact_div(&den).unwrap(), &one() + &q());
    }

    #[test]
    fn exact_div_two_variables() {
        let num = &(x(1).pow(3) * x(2)) - &(x(1) * x(2).pow(3));
        let den = &x(1) - &x(2);
        let quo = num.exact_div(&den).unwrap();
        assert_eq!(quo, &(x(1).pow(2) * x(2)) + &(x(1) * x(2).pow(2)));
        assert_eq!(&quo * &den, num);
    }

    #[test]
    fn exact_div_rejects_remainder() {
        let num = &(&one() + &q()) - &q().pow(3);
        let den = &one() - &q();
        assert!(matches!(
            num.exact_div(&den),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn exact_div_rejects_non_integral_quotient() {
        let num = one();
        let den = LaurentPoly::constant(2);
        assert!(matches!(
            num.exact_div(&den),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn exact_div_by_zero() {
        assert_eq!(
            one().exact_div(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn exact_div_laurent_quotient() {
        // (x1^-2 - 1) / (x1^-1 - x1) = x1^-1
        let num = &LaurentPoly::var_pow(Var::x(1), -2) - &one();
        let den = &LaurentPoly::var_pow(Var::x(1), -1) - &x(1);
        assert_eq!(
            num.exact_div(&den).unwrap(),
            LaurentPoly::var_pow(Var::x(1), -1)
        );
        assert_eq!(
            one().exact_div(&x(2)).unwrap(),
            LaurentPoly::var_pow(Var::x(2), -1)
        );
    }

    #[test]
    fn substitute_principal_monomials() {
        let mut map = HashMap::new();
        map.insert(Var::x(1), Monomial::var_pow(Var::Q, 3));
        map.insert(Var::x(2), Monomial::var(Var::Q));
        assert_eq!((&x(1) * &x(2)).substitute(&map), q().pow(4));

        let p = &x(1) + &LaurentPoly::var_pow(Var::x(1), -1);
        let r = p.substitute_one(Var::x(1), Monomial::var(Var::Q));
        assert_eq!(r.to_string(), "q^-1 + q");

        let m = 2;
        let p = &one() - &x(1).pow(m + 1);
        assert_eq!(
            p.substitute_one(Var::x(1), Monomial::var(Var::Q)),
            &one() - &q().pow(3)
        );
    }

    #[test]
    fn set_zero_and_coefficients() {
        let p = &(&one() - &x(1)) * &(&x(2) + &x(1).pow(2));
        assert_eq!(p.set_zero(Var::x(1)).unwrap(), x(2));
        assert_eq!(p.degree_in(Var::x(1)), Some(3));
        assert_eq!(p.coefficient_in(Var::x(1), 3), LaurentPoly::constant(-1));
        let bad = LaurentPoly::var_pow(Var::x(1), -1);
        assert!(bad.set_zero(Var::x(1)).is_err());
    }

    #[test]
    fn display_signs_and_coefficients() {
        let p = &(&LaurentPoly::constant(-3) * &x(2)) + &LaurentPoly::constant(7);
        assert_eq!(p.to_string(), "7 - 3*x2");
        assert_eq!((-&q()).to_string(), "-q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
