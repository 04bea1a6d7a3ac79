//! The fixed presentation of sl3: eight basis symbols, the bracket table,
//! Cartan pairings, the involution `tau` and the quadratic Casimir.
//!
//! The bracket table below is frozen; [`matrix_oracle`] realizes every symbol
//! as a traceless 3x3 matrix, and the tests check the table against matrix
//! commutators on all 64 pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    E1,
    E2,
    E12,
    F1,
    F2,
    F12,
    H1,
    H2,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::E1,
        Generator::E2,
        Generator::E12,
        Generator::F1,
        Generator::F2,
        Generator::F12,
        Generator::H1,
        Generator::H2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::E1 => "e1",
            Generator::E2 => "e2",
            Generator::E12 => "e12",
            Generator::F1 => "f1",
            Generator::F2 => "f2",
            Generator::F12 => "f12",
            Generator::H1 => "h1",
            Generator::H2 => "h2",
        }
    }

    pub fn is_cartan(self) -> bool {
        matches!(self, Generator::H1 | Generator::H2)
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == s.trim())
            .ok_or_else(|| format!("unknown generator {s:?}"))
    }
}

/// 3x3 rational matrix.
pub type Mat3 = [[Rational; 3]; 3];

fn unit(i: usize, j: usize) -> Mat3 {
    let mut m: Mat3 = Default::default();
    m[i][j] = Rational::one();
    m
}

fn mat_sub(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut m: Mat3 = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = &a[i][j] - &b[i][j];
        }
    }
    m
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut m: Mat3 = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                m[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    m
}

pub fn mat_commutator(a: &Mat3, b: &Mat3) -> Mat3 {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

pub fn trace(a: &Mat3) -> Rational {
    &(&a[0][0] + &a[1][1]) + &a[2][2]
}

/// Elementary-matrix realization: `e1 = E12`, `e2 = E23`, `e12 = E13`,
/// `f1 = E21`, `f2 = E32`, `f12 = E31`, `h1 = E11 - E22`, `h2 = E22 - E33`.
pub fn matrix_oracle(g: Generator) -> Mat3 {
    match g {
        Generator::E1 => unit(0, 1),
        Generator::E2 => unit(1, 2),
        Generator::E12 => unit(0, 2),
        Generator::F1 => unit(1, 0),
        Generator::F2 => unit(2, 1),
        Generator::F12 => unit(2, 0),
        Generator::H1 => mat_sub(&unit(0, 0), &unit(1, 1)),
        Generator::H2 => mat_sub(&unit(1, 1), &unit(2, 2)),
    }
}

/// Coordinates of a traceless matrix in the generator basis.
pub fn decompose(m: &Mat3) -> LieElement {
    let mut out = LieElement::zero();
    let off = [
        (Generator::E1, 0, 1),
        (Generator::E2, 1, 2),
        (Generator::E12, 0, 2),
        (Generator::F1, 1, 0),
        (Generator::F2, 2, 1),
        (Generator::F12, 2, 0),
    ];
    for (g, i, j) in off {
        out.add(g, &Scalar::from(m[i][j].clone()));
    }
    out.add(Generator::H1, &Scalar::from(m[0][0].clone()));
    out.add(Generator::H2, &Scalar::from(-m[2][2].clone()));
    out
}

/// `[x, y]` for basis symbols, as a signed sum of basis symbols.
fn bracket_basis(x: Generator, y: Generator) -> &'static [(i64, Generator)] {
    use Generator::*;
    const TABLE: [[&[(i64, Generator)]; 8]; 8] = {
        // rows x, columns y, in the order e1 e2 e12 f1 f2 f12 h1 h2
        [
            [&[], &[(1, E12)], &[], &[(1, H1)], &[], &[(-1, F2)], &[(-2, E1)], &[(1, E1)]],
            [&[(-1, E12)], &[], &[], &[], &[(1, H2)], &[(1, F1)], &[(1, E2)], &[(-2, E2)]],
            [&[], &[], &[], &[(-1, E2)], &[(1, E1)], &[(1, H1), (1, H2)], &[(-1, E12)], &[(-1, E12)]],
            [&[(-1, H1)], &[], &[(1, E2)], &[], &[(-1, F12)], &[], &[(2, F1)], &[(-1, F1)]],
            [&[], &[(-1, H2)], &[(-1, E1)], &[(1, F12)], &[], &[], &[(-1, F2)], &[(2, F2)]],
            [&[(1, F2)], &[(-1, F1)], &[(-1, H1), (-1, H2)], &[], &[], &[], &[(1, F12)], &[(1, F12)]],
            [&[(2, E1)], &[(-1, E2)], &[(1, E12)], &[(-2, F1)], &[(1, F2)], &[(-1, F12)], &[], &[]],
            [&[(-1, E1)], &[(2, E2)], &[(1, E12)], &[(1, F1)], &[(-2, F2)], &[(-1, F12)], &[], &[]],
        ]
    };
    TABLE[x.slot()][y.slot()]
}

/// Finite linear combination of basis symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    coeffs: BTreeMap<Generator, Scalar>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(g: Generator) -> Self {
        let mut e = Self::zero();
        e.add(g, &Scalar::one());
        e
    }

    pub fn add(&mut self, g: Generator, c: &Scalar) {
        let slot = self.coeffs.entry(g).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (g, v) in &self.coeffs {
            out.add(*g, &(v * c));
        }
        out
    }

    pub fn plus(&self, other: &LieElement) -> Self {
        let mut out = self.clone();
        for (g, v) in &other.coeffs {
            out.add(*g, v);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, g: Generator) -> Scalar {
        self.coeffs.get(&g).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Generator, &Scalar)> {
        self.coeffs.iter().map(|(g, c)| (*g, c))
    }

    pub fn is_cartan(&self) -> bool {
        self.coeffs.keys().all(|g| g.is_cartan())
    }

    /// Matrix image under the oracle realization; requires rational coefficients.
    pub fn to_matrix(&self) -> Option<Mat3> {
        let mut m: Mat3 = Default::default();
        for (g, c) in &self.coeffs {
            let c = c.as_rational()?;
            let gm = matrix_oracle(*g);
            for i in 0..3 {
                for j in 0..3 {
                    m[i][j] += &gm[i][j] * c;
                }
            }
        }
        Some(m)
    }
}

impl From<Generator> for LieElement {
    fn from(g: Generator) -> Self {
        LieElement::basis(g)
    }
}

pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (gx, cx) in x.terms() {
        for (gy, cy) in y.terms() {
            let c = cx * cy;
            for (s, g) in bracket_basis(gx, gy) {
                out.add(*g, &(&c * &Scalar::int(*s)));
            }
        }
    }
    out
}

/// The involution `h_i -> -h_i`, `e_i <-> f_i`, `e12 -> -f12`, `f12 -> -e12`,
/// returned as `(sign, image)`.
pub fn tau(g: Generator) -> (i64, Generator) {
    use Generator::*;
    match g {
        H1 => (-1, H1),
        H2 => (-1, H2),
        E1 => (1, F1),
        F1 => (1, E1),
        E2 => (1, F2),
        F2 => (1, E2),
        E12 => (-1, F12),
        F12 => (-1, E12),
    }
}

pub fn tau_element(x: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (g, c) in x.terms() {
        let (s, t) = tau(g);
        out.add(t, &(c * &Scalar::int(s)));
    }
    out
}

/// Weight, recorded by its values on `(h1, h2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub h1: Scalar,
    pub h2: Scalar,
}

impl Weight {
    pub fn new(h1: Scalar, h2: Scalar) -> Self {
        Self { h1, h2 }
    }

    pub fn alpha1() -> Self {
        Self::new(Scalar::int(2), Scalar::int(-1))
    }

    pub fn alpha2() -> Self {
        Self::new(Scalar::int(-1), Scalar::int(2))
    }

    pub fn rho() -> Self {
        Self::alpha1().plus(&Self::alpha2())
    }

    /// `a * alpha1 + b * alpha2`.
    pub fn from_roots(a: &Scalar, b: &Scalar) -> Self {
        Self::alpha1().scaled(a).plus(&Self::alpha2().scaled(b))
    }

    pub fn plus(&self, o: &Weight) -> Self {
        Self::new(&self.h1 + &o.h1, &self.h2 + &o.h2)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        Self::new(&self.h1 * c, &self.h2 * c)
    }

    /// Value on a Cartan element; `None` if `h` has non-Cartan components.
    pub fn pair(&self, h: &LieElement) -> Option<Scalar> {
        if !h.is_cartan() {
            return None;
        }
        Some(&(&h.coeff(Generator::H1) * &self.h1) + &(&h.coeff(Generator::H2) * &self.h2))
    }
}

/// `alpha(h)` for a simple root `alpha_i` (i = 1, 2) and coroot `h_j`, read
/// from `[h_j, e_i] = alpha_i(h_j) e_i` in the matrix realization.
pub fn cartan_pairing(root: usize, coroot: usize) -> Rational {
    let e = matrix_oracle(if root == 1 { Generator::E1 } else { Generator::E2 });
    let h = matrix_oracle(if coroot == 1 { Generator::H1 } else { Generator::H2 });
    let c = mat_commutator(&h, &e);
    let (i, j) = if root == 1 { (0, 1) } else { (1, 2) };
    c[i][j].clone()
}

/// Ordered product of generators acting on the left: the last symbol acts
/// first. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorWord(pub Vec<Generator>);

impl GeneratorWord {
    pub fn new(gens: impl IntoIterator<Item = Generator>) -> Self {
        Self(gens.into_iter().collect())
    }

    pub fn identity() -> Self {
        Self(Vec::new())
    }
}

impl FromStr for GeneratorWord {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(Self::identity());
        }
        s.split(',').map(str::parse).collect::<Result<_, _>>().map(GeneratorWord)
    }
}

/// Linear combination of words.
pub type WordSum = Vec<(Scalar, GeneratorWord)>;

/// Trace form `tr(xy)` on basis symbols, via the matrix oracle.
pub fn trace_form(x: Generator, y: Generator) -> Rational {
    trace(&mat_mul(&matrix_oracle(x), &matrix_oracle(y)))
}

/// Quadratic Casimir `sum_{ij} (G^-1)_{ij} x_i x_j` with `G` the Gram matrix
/// of the trace form in the generator basis.
pub fn casimir_word() -> WordSum {
    let n = Generator::ALL.len();
    let gram: Vec<Vec<Rational>> = Generator::ALL
        .iter()
        .map(|x| Generator::ALL.iter().map(|y| trace_form(*x, *y)).collect())
        .collect();
    let inv = invert(gram).expect("trace form is nondegenerate on sl3");
    let mut out = WordSum::new();
    for i in 0..n {
        for j in 0..n {
            if !inv[i][j].is_zero() {
                out.push((
                    Scalar::from(inv[i][j].clone()),
                    GeneratorWord::new([Generator::ALL[i], Generator::ALL[j]]),
                ));
            }
        }
    }
    out
}

/// Gauss-Jordan inverse of a small dense rational matrix.
fn invert(mut a: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (ac, ic) = (a[col][j].clone(), inv[col][j].clone());
                    a[r][j] -= &f * ac;
                    inv[r][j] -= &f * ic;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn b(x: Generator, y: Generator) -> LieElement {
        bracket(&x.into(), &y.into())
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(b(E1, F1), H1.into());
        assert_eq!(b(E1, E2), E12.into());
        assert!(b(H1, H1).is_zero());
    }

    #[test]
    fn table_matches_matrix_commutators() {
        for x in Generator::ALL {
            for y in Generator::ALL {
                let m = mat_commutator(&matrix_oracle(x), &matrix_oracle(y));
                assert_eq!(b(x, y), decompose(&m), "[{x},{y}]");
            }
        }
    }

    #[test]
    fn jacobi_identity() {
        for x in Generator::ALL {
            for y in Generator::ALL {
                for z in Generator::ALL {
                    let (xe, ye, ze): (LieElement, LieElement, LieElement) = (x.into(), y.into(), z.into());
                    let s = bracket(&xe, &bracket(&ye, &ze))
                        .plus(&bracket(&ye, &bracket(&ze, &xe)))
                        .plus(&bracket(&ze, &bracket(&xe, &ye)));
                    assert!(s.is_zero(), "jacobi fails on {x},{y},{z}");
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let f12 = mat_commutator(&matrix_oracle(F1), &matrix_oracle(F2));
        assert_eq!(decompose(&f12), LieElement::basis(F12).scaled(&Scalar::int(-1)));
        assert_eq!(cartan_pairing(1, 1), Rational::from_integer(2.into()));
        for g in Generator::ALL {
            assert!(trace(&matrix_oracle(g)).is_zero());
        }
    }

    #[test]
    fn cartan_matrix() {
        let c = |i, j| cartan_pairing(i, j).to_integer();
        assert_eq!([c(1, 1), c(1, 2), c(2, 1), c(2, 2)], [2.into(), (-1).into(), (-1).into(), 2.into()]);
        assert_eq!(Weight::alpha1().h1, Scalar::from(cartan_pairing(1, 1)));
        assert_eq!(Weight::alpha1().h2, Scalar::from(cartan_pairing(1, 2)));
        assert_eq!(Weight::alpha2().h1, Scalar::from(cartan_pairing(2, 1)));
    }

    #[test]
    fn tau_is_an_involutive_automorphism() {
        assert_eq!(tau(H1), (-1, H1));
        assert_eq!(tau(E1), (1, F1));
        assert_eq!(tau(E12), (-1, F12));
        for x in Generator::ALL {
            let xe: LieElement = x.into();
            assert_eq!(tau_element(&tau_element(&xe)), xe);
            for y in Generator::ALL {
                let ye: LieElement = y.into();
                assert_eq!(
                    tau_element(&bracket(&xe, &ye)),
                    bracket(&tau_element(&xe), &tau_element(&ye)),
                    "tau[{x},{y}]"
                );
            }
        }
    }

    #[test]
    fn casimir_coefficients() {
        let c = casimir_word();
        let get = |x, y| {
            c.iter()
                .find(|(_, w)| w.0 == vec![x, y])
                .map(|(s, _)| s.clone())
                .unwrap_or_default()
        };
        assert_eq!(get(E1, F1), Scalar::one());
        assert_eq!(get(F12, E12), Scalar::one());
        assert_eq!(get(H1, H1), Scalar::ratio(2, 3));
        assert_eq!(get(H1, H2), Scalar::ratio(1, 3));
        assert_eq!(c.len(), 10);
    }

    #[test]
    fn word_parsing() {
        let w: GeneratorWord = "f12,e12".parse().unwrap();
        assert_eq!(w.0, vec![F12, E12]);
        assert_eq!("".parse::<GeneratorWord>().unwrap(), GeneratorWord::identity());
        assert!("f3".parse::<GeneratorWord>().is_err());
    }
}
