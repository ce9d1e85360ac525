//! Normal-ordered differential operators with polynomial coefficients: finite
//! sums c z^alpha d^beta acting on [`FockPolynomial`], where d^beta is the
//! mixed partial in the beta multi-index. Every operator is stored in normal
//! order (all multiplications left of all derivatives), which makes the
//! representation unique and equality structural.
//!
//! Composition reorders with the Leibniz identity
//!
//! ```text
//! d^a z^b = sum over g <= min(a, b) of C(a, g) b!/(b-g)! z^(b-g) d^(a-g)
//! ```
//!
//! applied per variable. The formal adjoint with respect to the Fock pairing
//! <z^a, z^b> = delta_ab a! swaps the two exponent blocks, c z^alpha d^beta
//! into c z^beta d^alpha, because every coefficient in this crate is real.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{binomial, falling};
use crate::fock::FockPolynomial;
use crate::radical::RadicalScalar;
use crate::{Error, Result};

type Key = (Vec<u32>, Vec<u32>);

#[derive(Clone, PartialEq, Eq)]
pub struct WeylOperator {
    vars: usize,
    terms: BTreeMap<Key, RadicalScalar>,
    // cached degree bounds; correctness never depends on them
    z_degree: u32,
    d_degree: u32,
}

impl WeylOperator {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
            z_degree: 0,
            d_degree: 0,
        }
    }

    pub fn identity(vars: usize) -> Self {
        Self::term(vec![0; vars], vec![0; vars], RadicalScalar::one())
    }

    /// The single normal-ordered term coeff * z^alpha d^beta.
    pub fn term(alpha: Vec<u32>, beta: Vec<u32>, coeff: RadicalScalar) -> Self {
        assert_eq!(alpha.len(), beta.len(), "exponent blocks differ in length");
        let vars = alpha.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((alpha, beta), coeff);
        }
        Self::from_terms(vars, terms)
    }

    /// Multiplication by z_i (zero-based index).
    pub fn z(vars: usize, i: usize) -> Self {
        let mut alpha = vec![0; vars];
        alpha[i] = 1;
        Self::term(alpha, vec![0; vars], RadicalScalar::one())
    }

    /// The partial derivative in z_i (zero-based index).
    pub fn dz(vars: usize, i: usize) -> Self {
        let mut beta = vec![0; vars];
        beta[i] = 1;
        Self::term(vec![0; vars], beta, RadicalScalar::one())
    }

    fn from_terms(vars: usize, terms: BTreeMap<Key, RadicalScalar>) -> Self {
        let mut z_degree = 0;
        let mut d_degree = 0;
        for (alpha, beta) in terms.keys() {
            z_degree = z_degree.max(alpha.iter().sum());
            d_degree = d_degree.max(beta.iter().sum());
        }
        Self {
            vars,
            terms,
            z_degree,
            d_degree,
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &[u32], beta: &[u32]) -> RadicalScalar {
        self.terms
            .get(&(alpha.to_vec(), beta.to_vec()))
            .cloned()
            .unwrap_or_else(RadicalScalar::zero)
    }

    /// Largest total degree of any z block.
    pub fn z_degree(&self) -> u32 {
        self.z_degree
    }

    /// Largest total order of any derivative block.
    pub fn d_degree(&self) -> u32 {
        self.d_degree
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
                .map(|(k, c)| (k.clone(), c * coeff))
                .collect(),
            z_degree: self.z_degree,
            d_degree: self.d_degree,
        }
    }

    pub fn scale_rat(&self, q: &BigRational) -> Self {
        self.scale(&RadicalScalar::from_rational(q.clone()))
    }

    fn insert(terms: &mut BTreeMap<Key, RadicalScalar>, key: Key, c: RadicalScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(key) {
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

    /// Applies the operator to a polynomial.
    pub fn apply(&self, p: &FockPolynomial) -> Result<FockPolynomial> {
        if self.vars != p.vars() {
            return Err(Error::VariableMismatch {
                left: self.vars,
                right: p.vars(),
            });
        }
        let mut out: BTreeMap<Vec<u32>, RadicalScalar> = BTreeMap::new();
        for ((alpha, beta), c) in &self.terms {
            'mono: for (gamma, q) in p.terms() {
                let mut factor = BigRational::from_integer(1.into());
                for (&g, &b) in gamma.iter().zip(beta) {
                    if g < b {
                        continue 'mono;
                    }
                    factor *= BigRational::from_integer(falling(g as u64, b as u64).into());
                }
                let shifted: Vec<u32> = gamma
                    .iter()
                    .zip(beta)
                    .zip(alpha)
                    .map(|((&g, &b), &a)| g - b + a)
                    .collect();
                let coeff = (c * q).scale(&factor);
                if let Some(cur) = out.get_mut(&shifted) {
                    *cur = &*cur + &coeff;
                    if cur.is_zero() {
                        out.remove(&shifted);
                    }
                } else if !coeff.is_zero() {
                    out.insert(shifted, coeff);
                }
            }
        }
        let mut acc = FockPolynomial::zero(self.vars);
        for (alpha, c) in out {
            acc = &acc + &FockPolynomial::monomial(alpha, c);
        }
        Ok(acc)
    }

    /// Operator product self . rhs, with rhs acting first. The result is
    /// re-expressed in normal order.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.vars != rhs.vars {
            return Err(Error::VariableMismatch {
                left: self.vars,
                right: rhs.vars,
            });
        }
        let mut terms = BTreeMap::new();
        let mut gamma = vec![0u32; self.vars];
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                let limits: Vec<u32> = b1.iter().zip(a2).map(|(&x, &y)| x.min(y)).collect();
                let c12 = c1 * c2;
                gamma.iter_mut().for_each(|g| *g = 0);
                loop {
                    let mut comb = BigRational::from_integer(1.into());
                    for ((&g, &b), &a) in gamma.iter().zip(b1).zip(a2) {
                        comb *= BigRational::from_integer(
                            (binomial(b as u64, g as u64) * falling(a as u64, g as u64)).into(),
                        );
                    }
                    let z_exp: Vec<u32> = a1
                        .iter()
                        .zip(a2)
                        .zip(&gamma)
                        .map(|((&x, &y), &g)| x + y - g)
                        .collect();
                    let d_exp: Vec<u32> = b1
                        .iter()
                        .zip(b2)
                        .zip(&gamma)
                        .map(|((&x, &y), &g)| x + y - g)
                        .collect();
                    Self::insert(&mut terms, (z_exp, d_exp), c12.scale(&comb));
                    // advance the multi-index below `limits`
                    let mut dim = 0;
                    loop {
                        if dim == gamma.len() {
                            break;
                        }
                        if gamma[dim] < limits[dim] {
                            gamma[dim] += 1;
                            break;
                        }
                        gamma[dim] = 0;
                        dim += 1;
                    }
                    if dim == gamma.len() {
                        break;
                    }
                }
            }
        }
        Ok(Self::from_terms(self.vars, terms))
    }

    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        Ok(&self.compose(rhs)? - &rhs.compose(self)?)
    }

    /// Adjoint for the Fock pairing: c z^alpha d^beta into c z^beta d^alpha.
    pub fn formal_adjoint(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
            .collect();
        Self::from_terms(self.vars, terms)
    }
}

impl std::ops::Add for &WeylOperator {
    type Output = WeylOperator;
    fn add(self, rhs: &WeylOperator) -> WeylOperator {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            WeylOperator::insert(&mut terms, k.clone(), c.clone());
        }
        WeylOperator::from_terms(self.vars, terms)
    }
}

impl std::ops::Sub for &WeylOperator {
    type Output = WeylOperator;
    fn sub(self, rhs: &WeylOperator) -> WeylOperator {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &WeylOperator {
    type Output = WeylOperator;
    fn neg(self) -> WeylOperator {
        WeylOperator {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c))
                .collect(),
            z_degree: self.z_degree,
            d_degree: self.d_degree,
        }
    }
}

impl fmt::Display for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((alpha, beta), c)) in self.terms.iter().enumerate() {
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
            for (j, &e) in beta.iter().enumerate() {
                if e == 1 {
                    write!(f, " d{}", j + 1)?;
                } else if e > 1 {
                    write!(f, " d{}^{e}", j + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct OpTermRepr {
    z: Vec<u32>,
    d: Vec<u32>,
    coeff: RadicalScalar,
}

impl Serialize for WeylOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|((a, b), c)| OpTermRepr {
            z: a.clone(),
            d: b.clone(),
            coeff: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for WeylOperator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<OpTermRepr>::deserialize(deserializer)?;
        let vars = reprs.first().map_or(0, |t| t.z.len());
        let mut terms = BTreeMap::new();
        for t in reprs {
            if t.z.len() != vars || t.d.len() != vars {
                return Err(D::Error::custom("mixed variable counts in operator terms"));
            }
            WeylOperator::insert(&mut terms, (t.z, t.d), t.coeff);
        }
        Ok(WeylOperator::from_terms(vars, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_commutation() {
        let d = WeylOperator::dz(1, 0);
        let z = WeylOperator::z(1, 0);
        // d z = z d + 1
        let dz = d.compose(&z).unwrap();
        let expected = &z.compose(&d).unwrap() + &WeylOperator::identity(1);
        assert_eq!(dz, expected);
        assert_eq!(
            d.commutator(&z).unwrap(),
            WeylOperator::identity(1)
        );
    }

    #[test]
    fn euler_operator_counts_degree() {
        let euler = WeylOperator::z(1, 0).compose(&WeylOperator::dz(1, 0)).unwrap();
        for k in 0..6u32 {
            let zk = FockPolynomial::monomial(vec![k], RadicalScalar::one());
            let result = euler.apply(&zk).unwrap();
            assert_eq!(result, zk.scale(&RadicalScalar::integer(k as i64)));
        }
    }

    #[test]
    fn higher_order_reordering() {
        // d^2 z^2 = z^2 d^2 + 4 z d + 2
        let d2 = WeylOperator::term(vec![0], vec![2], RadicalScalar::one());
        let z2 = WeylOperator::term(vec![2], vec![0], RadicalScalar::one());
        let prod = d2.compose(&z2).unwrap();
        let expected = &(&WeylOperator::term(vec![2], vec![2], RadicalScalar::one())
            + &WeylOperator::term(vec![1], vec![1], RadicalScalar::integer(4)))
            + &WeylOperator::term(vec![0], vec![0], RadicalScalar::integer(2));
        assert_eq!(prod, expected);
    }

    #[test]
    fn degree_bookkeeping() {
        let op = &WeylOperator::term(vec![2, 1], vec![0, 3], RadicalScalar::one())
            + &WeylOperator::term(vec![0, 0], vec![1, 1], RadicalScalar::integer(-2));
        assert_eq!(op.z_degree(), 3);
        assert_eq!(op.d_degree(), 3);
    }

    #[test]
    fn adjoint_swaps_blocks() {
        let op = WeylOperator::term(vec![1, 0], vec![0, 2], RadicalScalar::sqrt_int(3));
        let adj = op.formal_adjoint();
        assert_eq!(
            adj,
            WeylOperator::term(vec![0, 2], vec![1, 0], RadicalScalar::sqrt_int(3))
        );
        assert_eq!(adj.formal_adjoint(), op);
    }

    #[test]
    fn json_schema_round_trip() {
        let op = &WeylOperator::term(vec![0, 2], vec![0, 0], RadicalScalar::one())
            + &WeylOperator::term(vec![0, 0], vec![1, 1], -RadicalScalar::sqrt_int(3));
        let js = serde_json::to_string(&op).unwrap();
        assert_eq!(
            js,
            r#"[{"z":[0,0],"d":[1,1],"coeff":{"3":"-1/1"}},{"z":[0,2],"d":[0,0],"coeff":{"1":"1/1"}}]"#
        );
        let back: WeylOperator = serde_json::from_str(&js).unwrap();
        assert_eq!(back, op);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_op() -> impl Strategy<Value = WeylOperator> {
            proptest::collection::vec(
                (
                    0u32..3,
                    0u32..3,
                    0u32..3,
                    0u32..3,
                    -6i64..=6,
                    1i64..=3,
                    prop::bool::ANY,
                ),
                1..4,
            )
            .prop_map(|terms| {
                let mut acc = WeylOperator::zero(2);
                for (a1, a2, b1, b2, p, q, with_radical) in terms {
                    let mut c = RadicalScalar::rational(p, q);
                    if with_radical {
                        c = &c * &RadicalScalar::sqrt_int(2);
                    }
                    acc = &acc + &WeylOperator::term(vec![a1, a2], vec![b1, b2], c);
                }
                acc
            })
        }

        fn arb_poly() -> impl Strategy<Value = FockPolynomial> {
            proptest::collection::vec((0u32..6, 0u32..6, -6i64..=6), 1..4).prop_map(|terms| {
                let mut acc = FockPolynomial::zero(2);
                for (a, b, p) in terms {
                    acc = &acc
                        + &FockPolynomial::monomial(vec![a, b], RadicalScalar::integer(p));
                }
                acc
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn compose_is_sound(a in arb_op(), b in arb_op(), p in arb_poly()) {
                let lhs = a.compose(&b).unwrap().apply(&p).unwrap();
                let rhs = a.apply(&b.apply(&p).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn compose_is_associative(a in arb_op(), b in arb_op(), c in arb_op()) {
                let lhs = a.compose(&b).unwrap().compose(&c).unwrap();
                let rhs = a.compose(&b.compose(&c).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn adjoint_matches_pairing(a in arb_op(), p in arb_poly(), q in arb_poly()) {
                let lhs = a.apply(&p).unwrap().inner_product(&q).unwrap();
                let rhs = p.inner_product(&a.formal_adjoint().apply(&q).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn adjoint_reverses_products(a in arb_op(), b in arb_op()) {
                let lhs = a.compose(&b).unwrap().formal_adjoint();
                let rhs = b.formal_adjoint().compose(&a.formal_adjoint()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
