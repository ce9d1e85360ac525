//! Sparse polynomials on Fock space: the dense subspace C[z_1, ..., z_n] of
//! the Fock space of entire functions, carried with exact radical
//! coefficients. Variables are rescaled so that the monomials satisfy
//! <z^a, z^b> = delta_ab a!, which makes every inner product a finite exact
//! sum. All coefficients arising here are real, so the pairing is symmetric
//! bilinear.
//!
//! The quartic invariant I = z_1 z_2^3 / (3 sqrt 3) of the principal sl(2)
//! action generates the weight-space ladders; [`FockPolynomial::invariant_power`]
//! expands its powers and [`invariant_norm_closed`] gives the closed norm
//! forms
//!
//! ```text
//! || I^m z_1^k ||^2 = (m!)^2 (m+1)_k (2/3)_m (1/3)_m
//! || I^m z_2^k ||^2 = (m!)^2 (3m+1)_k (2/3)_m (1/3)_m
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{factorial_rat, pochhammer, rat};
use crate::radical::RadicalScalar;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FockPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, RadicalScalar>,
}

/// Which variable multiplies the invariant in the closed norm forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    Z1,
    Z2,
}

impl FockPolynomial {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, coeff: RadicalScalar) -> Self {
        Self::monomial(vec![0; vars], coeff)
    }

    pub fn monomial(alpha: Vec<u32>, coeff: RadicalScalar) -> Self {
        let vars = alpha.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(alpha, coeff);
        }
        Self { vars, terms }
    }

    /// I^m z^extra in two variables, with I = z_1 z_2^3 / (3 sqrt 3), i.e.
    /// the monomial z_1^(m+e_1) z_2^(3m+e_2) scaled by (sqrt(3)/9)^m.
    pub fn invariant_power(m: u32, extra: [u32; 2]) -> Self {
        let coeff = RadicalScalar::sqrt_int(3)
            .scale(&rat(1, 9))
            .pow(m);
        Self::monomial(vec![m + extra[0], 3 * m + extra[1]], coeff)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &[u32]) -> RadicalScalar {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(RadicalScalar::zero)
    }

    /// Largest total degree among the monomials; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|a| a.iter().sum::<u32>())
            .max()
    }

    /// The common eigenvalue -1 - 3 m_1 + m_2 of the principal Cartan action
    /// on two-variable monomials, when every term shares it.
    pub fn weight(&self) -> Option<i64> {
        if self.vars != 2 || self.terms.is_empty() {
            return None;
        }
        let mut w = None;
        for alpha in self.terms.keys() {
            let this = -1 - 3 * alpha[0] as i64 + alpha[1] as i64;
            match w {
                None => w = Some(this),
                Some(prev) if prev != this => return None,
                _ => {}
            }
        }
        w
    }

    pub fn scale(&self, coeff: &RadicalScalar) -> Self {
        if coeff.is_zero() {
            return Self::zero(self.vars);
        }
        Self {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c * coeff))
                .collect(),
        }
    }

    /// Multiplies by the monomial coeff * z^alpha.
    pub fn mul_monomial(&self, alpha: &[u32], coeff: &RadicalScalar) -> Self {
        assert_eq!(alpha.len(), self.vars, "variable count mismatch");
        if coeff.is_zero() {
            return Self::zero(self.vars);
        }
        Self {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| {
                    let shifted: Vec<u32> =
                        a.iter().zip(alpha).map(|(x, y)| x + y).collect();
                    (shifted, c * coeff)
                })
                .collect(),
        }
    }

    fn insert_term(terms: &mut BTreeMap<Vec<u32>, RadicalScalar>, alpha: Vec<u32>, c: RadicalScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(alpha) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// <self, rhs> = sum over shared monomials of c_a d_a a!.
    pub fn inner_product(&self, rhs: &Self) -> Result<RadicalScalar> {
        if self.vars != rhs.vars {
            return Err(Error::VariableMismatch {
                left: self.vars,
                right: rhs.vars,
            });
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc = RadicalScalar::zero();
        for (alpha, c) in &small.terms {
            if let Some(d) = big.terms.get(alpha) {
                let fact: BigRational = alpha
                    .iter()
                    .map(|&e| factorial_rat(e as u64))
                    .product();
                acc = &acc + &(c * d).scale(&fact);
            }
        }
        Ok(acc)
    }

    pub fn norm_sq(&self) -> RadicalScalar {
        self.inner_product(self).expect("same polynomial")
    }

    /// Evaluates at a complex point (coefficients embed via their real value).
    pub fn eval_complex(&self, z: &[Complex64]) -> Complex64 {
        assert_eq!(z.len(), self.vars, "variable count mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for (alpha, c) in &self.terms {
            let mut term = Complex64::new(c.to_f64(), 0.0);
            for (zi, &e) in z.iter().zip(alpha) {
                term *= zi.powu(e);
            }
            acc += term;
        }
        acc
    }
}

/// || I^m z^k ||^2 along one axis, in closed form.
pub fn invariant_norm_closed(m: u32, k: u32, axis: Axis) -> BigRational {
    let m64 = m as u64;
    let fact = factorial_rat(m64);
    let shifted = match axis {
        Axis::Z1 => pochhammer(&rat(m as i64 + 1, 1), k as u64),
        Axis::Z2 => pochhammer(&rat(3 * m as i64 + 1, 1), k as u64),
    };
    &fact * &fact
        * shifted
        * pochhammer(&rat(2, 3), m64)
        * pochhammer(&rat(1, 3), m64)
}

impl std::ops::Add for &FockPolynomial {
    type Output = FockPolynomial;
    fn add(self, rhs: &FockPolynomial) -> FockPolynomial {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (a, c) in &rhs.terms {
            FockPolynomial::insert_term(&mut terms, a.clone(), c.clone());
        }
        FockPolynomial {
            vars: self.vars,
            terms,
        }
    }
}

impl std::ops::Sub for &FockPolynomial {
    type Output = FockPolynomial;
    fn sub(self, rhs: &FockPolynomial) -> FockPolynomial {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &FockPolynomial {
    type Output = FockPolynomial;
    fn neg(self) -> FockPolynomial {
        FockPolynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), -c))
                .collect(),
        }
    }
}

impl std::ops::Mul for &FockPolynomial {
    type Output = FockPolynomial;
    fn mul(self, rhs: &FockPolynomial) -> FockPolynomial {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                FockPolynomial::insert_term(&mut terms, sum, c * d);
            }
        }
        FockPolynomial {
            vars: self.vars,
            terms,
        }
    }
}

impl fmt::Display for FockPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (alpha, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (j, &e) in alpha.iter().enumerate() {
                if e == 1 {
                    write!(f, " z{}", j + 1)?;
                } else if e > 1 {
                    write!(f, " z{}^{e}", j + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FockPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    alpha: Vec<u32>,
    coeff: RadicalScalar,
}

impl Serialize for FockPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(a, c)| TermRepr {
            alpha: a.clone(),
            coeff: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for FockPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(deserializer)?;
        let vars = reprs.first().map_or(0, |t| t.alpha.len());
        let mut terms = BTreeMap::new();
        for t in reprs {
            if t.alpha.len() != vars {
                return Err(D::Error::custom(format!(
                    "mixed variable counts {} and {}",
                    vars,
                    t.alpha.len()
                )));
            }
            FockPolynomial::insert_term(&mut terms, t.alpha, t.coeff);
        }
        Ok(FockPolynomial { vars, terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn mono(alpha: &[u32], p: i64, q: i64) -> FockPolynomial {
        FockPolynomial::monomial(alpha.to_vec(), RadicalScalar::rational(p, q))
    }

    #[test]
    fn monomial_pairing() {
        let p = mono(&[2, 1], 1, 1);
        // <z1^2 z2, z1^2 z2> = 2! 1! = 2
        assert_eq!(
            p.inner_product(&p).unwrap(),
            RadicalScalar::integer(2)
        );
        let q = mono(&[3, 0], 1, 1);
        assert!(p.inner_product(&q).unwrap().is_zero());
        assert!(matches!(
            p.inner_product(&mono(&[1], 1, 1)),
            Err(Error::VariableMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn invariant_has_norm_two_ninths() {
        let inv = FockPolynomial::invariant_power(1, [0, 0]);
        assert_eq!(
            inv.coefficient(&[1, 3]),
            RadicalScalar::sqrt_int(3).scale(&rat(1, 9))
        );
        assert_eq!(inv.norm_sq().as_rational().unwrap(), rat(2, 9));
        assert_eq!(invariant_norm_closed(1, 0, Axis::Z1), rat(2, 9));
    }

    #[test]
    fn closed_norms_match_direct_pairing() {
        for m in 0..6u32 {
            for k in 0..5u32 {
                let p1 = FockPolynomial::invariant_power(m, [k, 0]);
                assert_eq!(
                    p1.norm_sq().as_rational().unwrap(),
                    invariant_norm_closed(m, k, Axis::Z1),
                    "axis z1, m={m} k={k}"
                );
                let p2 = FockPolynomial::invariant_power(m, [0, k]);
                assert_eq!(
                    p2.norm_sq().as_rational().unwrap(),
                    invariant_norm_closed(m, k, Axis::Z2),
                    "axis z2, m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn invariant_power_agrees_with_polynomial_product() {
        let inv = FockPolynomial::invariant_power(1, [0, 0]);
        let mut prod = FockPolynomial::constant(2, RadicalScalar::one());
        for m in 0..5u32 {
            assert_eq!(prod, FockPolynomial::invariant_power(m, [0, 0]));
            prod = &prod * &inv;
        }
        let with_extra = &FockPolynomial::invariant_power(2, [0, 0])
            * &FockPolynomial::monomial(vec![3, 1], RadicalScalar::one());
        assert_eq!(with_extra, FockPolynomial::invariant_power(2, [3, 1]));
    }

    #[test]
    fn weight_and_degree_queries() {
        let p = mono(&[2, 1], 1, 1);
        assert_eq!(p.weight(), Some(-6));
        assert_eq!(p.total_degree(), Some(3));
        // I-ladder shares the weight of its base monomial
        let ladder = &FockPolynomial::invariant_power(3, [2, 0])
            + &FockPolynomial::invariant_power(1, [2, 0]);
        assert_eq!(ladder.weight(), Some(-7));
        let mixed = &mono(&[1, 0], 1, 1) + &mono(&[0, 1], 1, 1);
        assert_eq!(mixed.weight(), None);
        assert_eq!(FockPolynomial::zero(2).weight(), None);
        assert_eq!(FockPolynomial::zero(2).total_degree(), None);
    }

    #[test]
    fn eval_complex_point() {
        let inv = FockPolynomial::invariant_power(1, [0, 0]);
        let one = Complex64::new(1.0, 0.0);
        let v = inv.eval_complex(&[one, one]);
        assert!((v.re - 3f64.sqrt() / 9.0).abs() < 1e-15);
        assert!(v.im.abs() < 1e-15);
        let zi = Complex64::new(0.0, 1.0);
        // z2 = i contributes i^3 = -i
        let v = inv.eval_complex(&[one, zi]);
        assert!(v.re.abs() < 1e-15);
        assert!((v.im + 3f64.sqrt() / 9.0).abs() < 1e-15);
    }

    #[test]
    fn json_schema_round_trip() {
        let inv = FockPolynomial::invariant_power(1, [0, 0]);
        let js = serde_json::to_string(&inv).unwrap();
        assert_eq!(js, r#"[{"alpha":[1,3],"coeff":{"3":"1/9"}}]"#);
        let back: FockPolynomial = serde_json::from_str(&js).unwrap();
        assert_eq!(back, inv);
        let sum = &mono(&[0, 2], -1, 2) + &mono(&[1, 0], 1, 1);
        let back: FockPolynomial =
            serde_json::from_str(&serde_json::to_string(&sum).unwrap()).unwrap();
        assert_eq!(back, sum);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = FockPolynomial> {
            proptest::collection::vec(
                (0u32..5, 0u32..5, -9i64..=9, 1i64..=4, prop::bool::ANY),
                0..5,
            )
            .prop_map(|terms| {
                let mut acc = FockPolynomial::zero(2);
                for (a, b, p, q, with_radical) in terms {
                    let mut c = RadicalScalar::rational(p, q);
                    if with_radical {
                        c = &c * &RadicalScalar::sqrt_int(3);
                    }
                    acc = &acc + &FockPolynomial::monomial(vec![a, b], c);
                }
                acc
            })
        }

        proptest! {
            #[test]
            fn pairing_is_symmetric_bilinear(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
                let pq = p.inner_product(&q).unwrap();
                prop_assert_eq!(pq.clone(), q.inner_product(&p).unwrap());
                let sum = &q + &r;
                let lhs = p.inner_product(&sum).unwrap();
                let rhs = &pq + &p.inner_product(&r).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn pairing_is_positive_definite(p in arb_poly()) {
                let n = p.norm_sq();
                if p.is_zero() {
                    prop_assert!(n.is_zero());
                } else {
                    prop_assert!(!n.is_zero());
                    prop_assert!(n.to_f64() > 0.0);
                }
            }

            #[test]
            fn serde_round_trip(p in arb_poly()) {
                let js = serde_json::to_string(&p).unwrap();
                let back: FockPolynomial = serde_json::from_str(&js).unwrap();
                // an empty term list forgets the variable count, by design
                if p.is_zero() {
                    prop_assert!(back.is_zero());
                } else {
                    prop_assert_eq!(back, p);
                }
            }
        }
    }
}
