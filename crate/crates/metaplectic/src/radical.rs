//! The exact scalar ring: finite Q-linear combinations of square roots of
//! squarefree positive integers.
//!
//! A value is a map from a squarefree radicand d to a rational coefficient
//! q_d and means sum_d q_d sqrt(d); the rational part is the d = 1 term.
//! The stored form is canonical (no zero coefficients, every key squarefree),
//! so structural equality is ring equality. Products stay canonical with gcd
//! bookkeeping alone, sqrt(d1) sqrt(d2) = g sqrt((d1/g)(d2/g)) for
//! g = gcd(d1, d2), because a product of coprime squarefree numbers is
//! squarefree. Full squarefree decomposition (trial division, then
//! Miller-Rabin and Pollard-Brent splitting of large cofactors) is needed
//! only when taking square roots of integers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{rat_parse, rat_string, rat_to_f64};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct RadicalScalar {
    terms: BTreeMap<BigUint, BigRational>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(p: i64) -> Self {
        Self::from_rational(BigRational::from_integer(p.into()))
    }

    /// p/q as a ring element. Panics on q = 0.
    pub fn rational(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(p.into(), q.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(BigUint::one(), q);
        }
        Self { terms }
    }

    /// sqrt(n) in canonical form: n = q^2 d with d squarefree gives q sqrt(d).
    pub fn sqrt_int(n: u64) -> Self {
        Self::sqrt_biguint(&BigUint::from(n))
    }

    pub fn sqrt_biguint(n: &BigUint) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let (q, d) = factor::squarefree_decomposition(n);
        let mut terms = BTreeMap::new();
        terms.insert(d, BigRational::from_integer(q.into()));
        Self { terms }
    }

    /// sqrt(p/q) = sqrt(p q) / q for p/q >= 0; errors on a negative radicand.
    pub fn sqrt_rational(r: &BigRational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::NegativeRadicand(rat_string(r)));
        }
        let pq = r.numer().magnitude() * r.denom().magnitude();
        let inv_den = BigRational::new(1.into(), r.denom().clone());
        Ok(Self::sqrt_biguint(&pq).scale(&inv_den))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// True when only the d = 1 term is present (or the value is zero).
    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (d, q) = self.terms.iter().next().unwrap();
                d.is_one().then(|| q.clone())
            }
            _ => None,
        }
    }

    pub fn rational_part(&self) -> BigRational {
        self.coefficient(&BigUint::one())
    }

    /// Coefficient of sqrt(d); zero when absent.
    pub fn coefficient(&self, d: &BigUint) -> BigRational {
        self.terms.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(d, c)| (d.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Division. Defined exactly for nonzero divisors that are a pure
    /// rational or a single radical term q sqrt(d), whose inverse is
    /// sqrt(d) / (q d); anything else is an error.
    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.try_inv()?)
    }

    pub fn try_inv(&self) -> Result<Self> {
        match self.terms.len() {
            0 => Err(Error::DivisionByZero),
            1 => {
                let (d, q) = self.terms.iter().next().unwrap();
                let coeff = BigRational::new(1.into(), 1.into())
                    / (q * BigRational::from_integer(d.clone().into()));
                let mut terms = BTreeMap::new();
                terms.insert(d.clone(), coeff);
                Ok(Self { terms })
            }
            _ => Err(Error::NonInvertibleDivisor(self.to_string())),
        }
    }

    /// Rigorous enclosure [lo, hi] of the value with sqrt(d) bracketed to
    /// `bits` fractional binary digits.
    pub fn to_rational_interval(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (d, q) in &self.terms {
            let (s_lo, s_hi) = sqrt_enclosure(d, bits);
            if q.is_negative() {
                lo += q * &s_hi;
                hi += q * &s_lo;
            } else {
                lo += q * &s_lo;
                hi += q * &s_hi;
            }
        }
        (lo, hi)
    }

    /// Nearest f64, by interval refinement until both endpoints round to the
    /// same float (correct to at most one unit in the last place).
    pub fn to_f64(&self) -> f64 {
        for bits in [64u32, 128, 256, 512] {
            let (lo, hi) = self.to_rational_interval(bits);
            let (flo, fhi) = (rat_to_f64(&lo), rat_to_f64(&hi));
            if flo == fhi {
                return flo;
            }
        }
        let (lo, hi) = self.to_rational_interval(768);
        rat_to_f64(&((lo + hi) / BigRational::from_integer(2.into())))
    }

    fn insert_term(terms: &mut BTreeMap<BigUint, BigRational>, d: BigUint, q: BigRational) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(d) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Floor/ceil bracket of sqrt(d) with `bits` fractional binary digits.
fn sqrt_enclosure(d: &BigUint, bits: u32) -> (BigRational, BigRational) {
    let scaled = d << (2 * bits as u64);
    let root = scaled.sqrt();
    let denom = BigUint::one() << bits as u64;
    let lo = BigRational::new(root.clone().into(), denom.clone().into());
    if &root * &root == scaled {
        return (lo.clone(), lo);
    }
    let hi = BigRational::new((root + BigUint::one()).into(), denom.into());
    (lo, hi)
}

impl From<i64> for RadicalScalar {
    fn from(p: i64) -> Self {
        Self::integer(p)
    }
}

impl From<BigRational> for RadicalScalar {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl std::ops::Add for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut terms = self.terms.clone();
        for (d, q) in &rhs.terms {
            RadicalScalar::insert_term(&mut terms, d.clone(), q.clone());
        }
        RadicalScalar { terms }
    }
}

impl std::ops::Sub for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar {
            terms: self.terms.iter().map(|(d, q)| (d.clone(), -q)).collect(),
        }
    }
}

impl std::ops::Mul for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        use num_integer::Integer;
        let mut terms = BTreeMap::new();
        for (d1, q1) in &self.terms {
            for (d2, q2) in &rhs.terms {
                let g = d1.gcd(d2);
                let d = (d1 / &g) * (d2 / &g);
                let q = q1 * q2 * BigRational::from_integer(g.into());
                RadicalScalar::insert_term(&mut terms, d, q);
            }
        }
        RadicalScalar { terms }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $fn:ident) => {
        impl std::ops::$trait for RadicalScalar {
            type Output = RadicalScalar;
            fn $fn(self, rhs: RadicalScalar) -> RadicalScalar {
                (&self).$fn(&rhs)
            }
        }
        impl std::ops::$trait<&RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $fn(self, rhs: &RadicalScalar) -> RadicalScalar {
                (&self).$fn(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let aq = q.abs();
            if d.is_one() {
                write!(f, "{aq}")?;
            } else if aq.is_one() {
                write!(f, "sqrt({d})")?;
            } else if aq.denom().is_one() {
                write!(f, "{}*sqrt({d})", aq.numer())?;
            } else {
                write!(f, "({aq})*sqrt({d})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for RadicalScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (d, q) in &self.terms {
            map.serialize_entry(&d.to_string(), &rat_string(q))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for RadicalScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RadVisitor;
        impl<'de> Visitor<'de> for RadVisitor {
            type Value = RadicalScalar;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a map from radicand to rational coefficient")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<RadicalScalar, A::Error> {
                use serde::de::Error as DeError;
                let mut acc = RadicalScalar::zero();
                while let Some((ds, qs)) = access.next_entry::<String, String>()? {
                    let d = ds
                        .parse::<BigUint>()
                        .map_err(|e| A::Error::custom(format!("radicand `{ds}`: {e}")))?;
                    let q = rat_parse(&qs).map_err(|e| A::Error::custom(e.to_string()))?;
                    acc = &acc + &RadicalScalar::sqrt_biguint(&d).scale(&q);
                }
                Ok(acc)
            }
        }
        deserializer.deserialize_map(RadVisitor)
    }
}

mod factor {
    //! Squarefree decomposition of positive integers. Trial division covers
    //! everything the algebra actually produces; the Miller-Rabin and
    //! Pollard-Brent paths keep the decomposition correct for arbitrary
    //! inputs instead of silently returning non-squarefree radicands.

    use std::collections::BTreeMap;

    use num_bigint::BigUint;
    use num_integer::Integer;
    use num_traits::{One, Zero};

    const TRIAL_BOUND: u64 = 1 << 20;

    const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

    /// n = q^2 d with d squarefree; requires n >= 1.
    pub fn squarefree_decomposition(n: &BigUint) -> (BigUint, BigUint) {
        let mut exps = BTreeMap::new();
        factor(n.clone(), &mut exps);
        let mut q = BigUint::one();
        let mut d = BigUint::one();
        for (p, e) in exps {
            q *= p.pow(e / 2);
            if e % 2 == 1 {
                d *= p;
            }
        }
        (q, d)
    }

    fn factor(mut n: BigUint, out: &mut BTreeMap<BigUint, u32>) {
        if n.is_one() || n.is_zero() {
            return;
        }
        let mut p: u64 = 2;
        while p <= TRIAL_BOUND {
            let bp = BigUint::from(p);
            if &bp * &bp > n {
                if !n.is_one() {
                    *out.entry(n).or_insert(0) += 1;
                }
                return;
            }
            while n.is_multiple_of(&bp) {
                n /= &bp;
                *out.entry(bp.clone()).or_insert(0) += 1;
            }
            p = match p {
                2 => 3,
                3 => 5,
                _ => p + if p % 6 == 5 { 2 } else { 4 },
            };
        }
        if !n.is_one() {
            split(n, out);
        }
    }

    /// Splits a cofactor with no prime factor below the trial bound.
    fn split(n: BigUint, out: &mut BTreeMap<BigUint, u32>) {
        if is_probable_prime(&n) {
            *out.entry(n).or_insert(0) += 1;
            return;
        }
        let r = n.sqrt();
        if &r * &r == n {
            let mut inner = BTreeMap::new();
            split(r, &mut inner);
            for (p, e) in inner {
                *out.entry(p).or_insert(0) += 2 * e;
            }
            return;
        }
        let d = pollard_brent(&n);
        let m = &n / &d;
        split(d, out);
        split(m, out);
    }

    fn is_probable_prime(n: &BigUint) -> bool {
        let two = BigUint::from(2u32);
        if n < &two {
            return false;
        }
        for &p in &MR_BASES {
            let bp = BigUint::from(p);
            if n.is_multiple_of(&bp) {
                return n == &bp;
            }
        }
        let n_minus_1 = n - BigUint::one();
        let s = n_minus_1.trailing_zeros().unwrap_or(0);
        let d = &n_minus_1 >> s;
        'bases: for &a in &MR_BASES {
            let mut x = BigUint::from(a).modpow(&d, n);
            if x.is_one() || x == n_minus_1 {
                continue;
            }
            for _ in 1..s {
                x = x.modpow(&two, n);
                if x == n_minus_1 {
                    continue 'bases;
                }
            }
            return false;
        }
        true
    }

    fn pollard_brent(n: &BigUint) -> BigUint {
        for c in 1u64..64 {
            let cc = BigUint::from(c);
            let step = |x: &BigUint| (x * x + &cc) % n;
            let mut y = BigUint::from(2u32);
            let mut x = y.clone();
            let mut ys = y.clone();
            let mut q = BigUint::one();
            let mut g = BigUint::one();
            let mut r: u64 = 1;
            let m: u64 = 128;
            while g.is_one() {
                x = y.clone();
                for _ in 0..r {
                    y = step(&y);
                }
                let mut k = 0;
                while k < r && g.is_one() {
                    ys = y.clone();
                    for _ in 0..m.min(r - k) {
                        y = step(&y);
                        let diff = if x >= y { &x - &y } else { &y - &x };
                        q = (&q * &diff) % n;
                    }
                    g = q.gcd(n);
                    k += m;
                }
                r *= 2;
            }
            if &g == n {
                loop {
                    ys = step(&ys);
                    let diff = if x >= ys { &x - &ys } else { &ys - &x };
                    g = diff.gcd(n);
                    if !g.is_one() {
                        break;
                    }
                }
            }
            if !g.is_one() && &g != n {
                return g;
            }
        }
        unreachable!("Pollard-Brent exhausted its polynomial offsets")
    }
}
