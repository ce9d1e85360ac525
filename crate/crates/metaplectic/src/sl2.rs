//! The principal sl(2) triple inside sp(n,R) and its metaplectic action on
//! Fock space.
//!
//! Lie algebra elements are block matrices [[A, B], [C, -A^t]] with B and C
//! symmetric, held exactly over the radical ring. The principal triple is
//!
//! ```text
//! H  = [[D, 0], [0, -D]],   D = diag(2n-1, 2n-5, ..., -(2n-3))
//! E+ = [[0, B], [C, 0]],    b_jk = beta_k delta_{j, n-k+1},
//!                           beta_k = sqrt((2k-1)(2(n-k)+1))
//!                           c_jk = gamma_k delta_{j, n-k+2},
//!                           gamma_k = 2 sqrt((k-1)(n-k+1))
//! E- = (E+)^t
//! ```
//!
//! The derived action on polynomials sends [[A, B], [C, -A^t]] to
//!
//! ```text
//! -(1/2) sum B_jk d_j d_k + (1/2) sum C_jk z_j z_k - tr(A)/2 - sum A_jk z_k d_j
//! ```
//!
//! For n = 2 this gives the operators whose branching the rest of the crate
//! studies, and the sl(2) Casimir 2 E+ E- - H + H^2 / 2 becomes an exact
//! fourth-order operator commuting with the whole action.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::rat;
use crate::radical::RadicalScalar;
use crate::weyl::WeylOperator;
use crate::{Error, Result};

/// Dense matrix over the radical ring.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RadMatrix {
    rows: Vec<Vec<RadicalScalar>>,
}

impl RadMatrix {
    pub fn zero(n: usize, m: usize) -> Self {
        Self {
            rows: vec![vec![RadicalScalar::zero(); m]; n],
        }
    }

    pub fn from_fn(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> RadicalScalar) -> Self {
        Self {
            rows: (0..n).map(|i| (0..m).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<RadicalScalar>>) -> Result<Self> {
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Invariant("ragged matrix rows".into()));
        }
        Ok(Self { rows })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize, j: usize) -> &RadicalScalar {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RadicalScalar) {
        self.rows[i][j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ncols(), self.nrows(), |i, j| self.rows[j][i].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows() == self.ncols() && *self == self.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(RadicalScalar::is_zero))
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        Self::from_fn(self.nrows(), self.ncols(), |i, j| &self.rows[i][j] * c)
    }

    pub fn trace(&self) -> RadicalScalar {
        let mut acc = RadicalScalar::zero();
        for i in 0..self.nrows().min(self.ncols()) {
            acc = &acc + &self.rows[i][i];
        }
        acc
    }
}

impl std::ops::Add for &RadMatrix {
    type Output = RadMatrix;
    fn add(self, rhs: &RadMatrix) -> RadMatrix {
        assert_eq!((self.nrows(), self.ncols()), (rhs.nrows(), rhs.ncols()));
        RadMatrix::from_fn(self.nrows(), self.ncols(), |i, j| {
            &self.rows[i][j] + &rhs.rows[i][j]
        })
    }
}

impl std::ops::Sub for &RadMatrix {
    type Output = RadMatrix;
    fn sub(self, rhs: &RadMatrix) -> RadMatrix {
        assert_eq!((self.nrows(), self.ncols()), (rhs.nrows(), rhs.ncols()));
        RadMatrix::from_fn(self.nrows(), self.ncols(), |i, j| {
            &self.rows[i][j] - &rhs.rows[i][j]
        })
    }
}

impl std::ops::Neg for &RadMatrix {
    type Output = RadMatrix;
    fn neg(self) -> RadMatrix {
        RadMatrix::from_fn(self.nrows(), self.ncols(), |i, j| -&self.rows[i][j])
    }
}

impl std::ops::Mul for &RadMatrix {
    type Output = RadMatrix;
    fn mul(self, rhs: &RadMatrix) -> RadMatrix {
        assert_eq!(self.ncols(), rhs.nrows(), "inner dimensions differ");
        RadMatrix::from_fn(self.nrows(), rhs.ncols(), |i, j| {
            let mut acc = RadicalScalar::zero();
            for k in 0..self.ncols() {
                acc = &acc + &(&self.rows[i][k] * &rhs.rows[k][j]);
            }
            acc
        })
    }
}

impl fmt::Debug for RadMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// An element [[A, B], [C, -A^t]] of sp(n,R) with exact entries; B and C are
/// required symmetric at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct SpElement {
    n: usize,
    a: RadMatrix,
    b: RadMatrix,
    c: RadMatrix,
}

impl SpElement {
    pub fn new(a: RadMatrix, b: RadMatrix, c: RadMatrix) -> Result<Self> {
        let n = a.nrows();
        for (name, m) in [("A", &a), ("B", &b), ("C", &c)] {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::Invariant(format!("block {name} is not {n} x {n}")));
            }
        }
        if !b.is_symmetric() {
            return Err(Error::Invariant("block B is not symmetric".into()));
        }
        if !c.is_symmetric() {
            return Err(Error::Invariant("block C is not symmetric".into()));
        }
        Ok(Self { n, a, b, c })
    }

    /// Skips the symmetry validation; used to build deliberately broken
    /// elements for negative controls.
    pub fn new_unchecked(a: RadMatrix, b: RadMatrix, c: RadMatrix) -> Self {
        let n = a.nrows();
        Self { n, a, b, c }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_a(&self) -> &RadMatrix {
        &self.a
    }

    pub fn block_b(&self) -> &RadMatrix {
        &self.b
    }

    pub fn block_c(&self) -> &RadMatrix {
        &self.c
    }

    /// The full 2n x 2n matrix [[A, B], [C, -A^t]].
    pub fn embed(&self) -> RadMatrix {
        let n = self.n;
        let at = self.a.transpose();
        RadMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => self.a.get(i, j).clone(),
            (true, false) => self.b.get(i, j - n).clone(),
            (false, true) => self.c.get(i - n, j).clone(),
            (false, false) => -at.get(i - n, j - n),
        })
    }

    pub fn transpose(&self) -> Self {
        // [[A,B],[C,-A^t]]^t = [[A^t, C^t], [B^t, -A]]; symmetric blocks swap
        Self {
            n: self.n,
            a: self.a.transpose(),
            b: self.c.transpose(),
            c: self.b.transpose(),
        }
    }
}

impl fmt::Debug for SpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sp({}) element:", self.n)?;
        let m = self.embed();
        for i in 0..m.nrows() {
            write!(f, "  [")?;
            for j in 0..m.ncols() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", m.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SpBlocks {
    #[serde(rename = "A")]
    a: RadMatrix,
    #[serde(rename = "B")]
    b: RadMatrix,
    #[serde(rename = "C")]
    c: RadMatrix,
}

#[derive(Serialize, Deserialize)]
struct SpRepr {
    n: usize,
    blocks: SpBlocks,
}

impl Serialize for SpElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpRepr {
            n: self.n,
            blocks: SpBlocks {
                a: self.a.clone(),
                b: self.b.clone(),
                c: self.c.clone(),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = SpRepr::deserialize(d)?;
        let elem = SpElement::new(repr.blocks.a, repr.blocks.b, repr.blocks.c)
            .map_err(|e| D::Error::custom(e.to_string()))?;
        if elem.n != repr.n {
            return Err(D::Error::custom(format!(
                "declared n = {} but blocks are {} x {}",
                repr.n, elem.n, elem.n
            )));
        }
        Ok(elem)
    }
}

/// The principal triple (H, E+, E-) as exact sp(n,R) elements.
#[derive(Clone, Debug)]
pub struct PrincipalTriple {
    pub h: SpElement,
    pub e_plus: SpElement,
    pub e_minus: SpElement,
}

/// Builds the principal sl(2) inside sp(n,R); n >= 1.
pub fn principal_sl2(n: usize) -> PrincipalTriple {
    assert!(n >= 1, "n must be at least 1");
    let d = RadMatrix::from_fn(n, n, |i, j| {
        if i == j {
            // 2n - 1 - 4i for zero-based i
            RadicalScalar::integer(2 * n as i64 - 1 - 4 * i as i64)
        } else {
            RadicalScalar::zero()
        }
    });
    let b = RadMatrix::from_fn(n, n, |j, k| {
        // beta_{k+1} at row n - k - 1 (zero-based)
        if j + k + 1 == n {
            let k1 = k as u64 + 1;
            RadicalScalar::sqrt_int((2 * k1 - 1) * (2 * (n as u64 - k1) + 1))
        } else {
            RadicalScalar::zero()
        }
    });
    let c = RadMatrix::from_fn(n, n, |j, k| {
        // gamma_{k+1} at row n - k (zero-based), for k >= 1
        if k >= 1 && j + k == n {
            let k1 = k as u64 + 1;
            RadicalScalar::sqrt_int((k1 - 1) * (n as u64 - k1 + 1)).scale(&rat(2, 1))
        } else {
            RadicalScalar::zero()
        }
    });
    let zero = RadMatrix::zero(n, n);
    let h = SpElement::new(d, zero.clone(), zero.clone()).expect("diagonal blocks");
    let e_plus = SpElement::new(zero.clone(), b.clone(), c.clone()).expect("anti-diagonal blocks");
    let e_minus = SpElement::new(zero, c, b).expect("transposed blocks");
    PrincipalTriple { h, e_plus, e_minus }
}

/// One named check with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub label: String,
    pub pass: bool,
}

/// Result of verifying the defining sl(2) relations on 2n x 2n matrices.
#[derive(Clone, Debug, Serialize)]
pub struct Sl2MatrixReport {
    pub n: usize,
    pub checks: Vec<CheckLine>,
}

impl Sl2MatrixReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks block symmetry and the relations [H, E+] = 2 E+, [H, E-] = -2 E-,
/// [E+, E-] = H on the embedded matrices.
pub fn verify_sl2_matrix(triple: &PrincipalTriple) -> Sl2MatrixReport {
    let n = triple.h.n();
    let mut checks = Vec::new();
    for (name, el) in [("H", &triple.h), ("E+", &triple.e_plus), ("E-", &triple.e_minus)] {
        checks.push(CheckLine {
            label: format!("{name}: B block symmetric"),
            pass: el.block_b().is_symmetric(),
        });
        checks.push(CheckLine {
            label: format!("{name}: C block symmetric"),
            pass: el.block_c().is_symmetric(),
        });
    }
    let h = triple.h.embed();
    let ep = triple.e_plus.embed();
    let em = triple.e_minus.embed();
    let comm = |x: &RadMatrix, y: &RadMatrix| &(x * y) - &(y * x);
    checks.push(CheckLine {
        label: "[H, E+] = 2 E+".into(),
        pass: comm(&h, &ep) == ep.scale(&RadicalScalar::integer(2)),
    });
    checks.push(CheckLine {
        label: "[H, E-] = -2 E-".into(),
        pass: comm(&h, &em) == em.scale(&RadicalScalar::integer(-2)),
    });
    checks.push(CheckLine {
        label: "[E+, E-] = H".into(),
        pass: comm(&ep, &em) == h,
    });
    checks.push(CheckLine {
        label: "E- = (E+)^t".into(),
        pass: em == ep.transpose(),
    });
    Sl2MatrixReport { n, checks }
}

/// The derived metaplectic action of an sp(n,R) element on polynomials:
/// -(1/2)(B d, d) + (1/2)(C z, z) - tr(A)/2 - d_{Az}.
pub fn d_lambda(x: &SpElement) -> WeylOperator {
    let n = x.n();
    let half = rat(1, 2);
    let mut op = WeylOperator::zero(n);
    for j in 0..n {
        for k in 0..n {
            let bjk = x.block_b().get(j, k);
            if !bjk.is_zero() {
                let mut beta = vec![0u32; n];
                beta[j] += 1;
                beta[k] += 1;
                op = &op
                    + &WeylOperator::term(vec![0; n], beta, -bjk.scale(&half));
            }
            let cjk = x.block_c().get(j, k);
            if !cjk.is_zero() {
                let mut alpha = vec![0u32; n];
                alpha[j] += 1;
                alpha[k] += 1;
                op = &op
                    + &WeylOperator::term(alpha, vec![0; n], cjk.scale(&half));
            }
            let ajk = x.block_a().get(j, k);
            if !ajk.is_zero() {
                let mut alpha = vec![0u32; n];
                let mut beta = vec![0u32; n];
                alpha[k] += 1;
                beta[j] += 1;
                op = &op + &WeylOperator::term(alpha, beta, -ajk);
            }
        }
    }
    let tr = x.block_a().trace();
    &op - &WeylOperator::term(vec![0; n], vec![0; n], tr.scale(&half))
}

/// The principal triple as operators on polynomials in n variables.
#[derive(Clone, Debug)]
pub struct ActionTriple {
    pub h: WeylOperator,
    pub e_plus: WeylOperator,
    pub e_minus: WeylOperator,
}

pub fn principal_action(n: usize) -> ActionTriple {
    let triple = principal_sl2(n);
    ActionTriple {
        h: d_lambda(&triple.h),
        e_plus: d_lambda(&triple.e_plus),
        e_minus: d_lambda(&triple.e_minus),
    }
}

/// The sl(2) Casimir 2 E+ E- - H + H^2 / 2 in the principal action on n
/// variables.
pub fn casimir_operator(n: usize) -> WeylOperator {
    let act = principal_action(n);
    let epem = act.e_plus.compose(&act.e_minus).expect("same vars");
    let h2 = act.h.compose(&act.h).expect("same vars");
    &(&epem.scale(&RadicalScalar::integer(2)) - &act.h) + &h2.scale_rat(&rat(1, 2))
}
