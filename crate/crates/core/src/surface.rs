//! Beauville-type surfaces `S = (C x C) / G` with `G = (Z/n)^2` acting by
//! `g (P1, P2) = (g P1, psi(g) P2)`.
//!
//! Cohomology of `O_S(mL)` is the `G`-invariant part of the Künneth
//! decomposition on `C x C`. A tensor `V_chi (x) V_tau` is invariant exactly
//! when `chi + phi(tau) = 0`, where `phi` is the dual of `psi` acting on
//! characters. With the Serre-dual description of `H^1(O_C(m))` this gives
//!
//! ```text
//! h1(mL) = #{(chi, chi') : chi = phi(chi')} + #{(chi, chi') : chi' = phi(chi)}
//! ```
//!
//! over monomial characters `chi` of degree `m` and `chi'` of degree
//! `m' = n - 3 - m`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arithmetic::{inv3, Modulus, Residue};
use crate::characters::{CharacterV, Monomial};
use crate::error::{Error, Result};
use crate::fermat::{genus, h0_eigenbasis};

/// A 2x2 matrix over `Z/n`, acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    entries: [[u32; 2]; 2],
    modulus: Modulus,
}

impl Mat2 {
    pub fn new(entries: [[i64; 2]; 2], modulus: Modulus) -> Self {
        let r = |x| modulus.reduce(x);
        Mat2 {
            entries: [
                [r(entries[0][0]), r(entries[0][1])],
                [r(entries[1][0]), r(entries[1][1])],
            ],
            modulus,
        }
    }

    pub fn from_rows(rows: [[u32; 2]; 2], modulus: Modulus) -> Self {
        Mat2::new(rows.map(|row| row.map(i64::from)), modulus)
    }

    pub fn identity(modulus: Modulus) -> Self {
        Mat2::new([[1, 0], [0, 1]], modulus)
    }

    pub fn diagonal(a: Residue, b: Residue) -> Self {
        Mat2::new([[a.value() as i64, 0], [0, b.value() as i64]], a.modulus())
    }

    pub fn rows(&self) -> [[u32; 2]; 2] {
        self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> Residue {
        self.modulus.residue(self.entries[i][j] as i64)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn e(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j] as i64
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(
            [[self.e(0, 0), self.e(1, 0)], [self.e(0, 1), self.e(1, 1)]],
            self.modulus,
        )
    }

    pub fn mul(&self, rhs: &Mat2) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = self.e(i, 0) * rhs.e(0, j) + self.e(i, 1) * rhs.e(1, j);
            }
        }
        Mat2::new(out, self.modulus)
    }

    pub fn scale(&self, k: Residue) -> Self {
        let k = k.value() as i64;
        Mat2::new(
            [
                [k * self.e(0, 0), k * self.e(0, 1)],
                [k * self.e(1, 0), k * self.e(1, 1)],
            ],
            self.modulus,
        )
    }

    pub fn det(&self) -> Residue {
        self.modulus
            .residue(self.e(0, 0) * self.e(1, 1) - self.e(0, 1) * self.e(1, 0))
    }

    pub fn is_invertible(&self) -> bool {
        self.det().is_unit()
    }

    #[inline]
    pub fn apply(&self, x: u32, y: u32) -> (u32, u32) {
        let (x, y) = (x as i64, y as i64);
        (
            self.modulus.reduce(self.e(0, 0) * x + self.e(0, 1) * y),
            self.modulus.reduce(self.e(1, 0) * x + self.e(1, 1) * y),
        )
    }

    /// Every 2x2 matrix over `Z/n`, row-major lexicographic.
    pub fn all(modulus: Modulus) -> impl Iterator<Item = Mat2> {
        let n = modulus.get();
        (0..n.pow(4)).map(move |mut k| {
            let mut digits = [0u32; 4];
            for d in digits.iter_mut().rev() {
                *d = k % n;
                k /= n;
            }
            Mat2::from_rows([[digits[0], digits[1]], [digits[2], digits[3]]], modulus)
        })
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Columns are `v1`, `v2` in standard coordinates: `3^{-1} [[2, -1], [-1, 2]]`.
fn v_basis_to_standard(n: Modulus) -> Result<Mat2> {
    Ok(Mat2::new([[2, -1], [-1, 2]], n).scale(inv3(n)?))
}

/// Inverse of [`v_basis_to_standard`].
fn standard_to_v_basis(n: Modulus) -> Mat2 {
    Mat2::new([[2, 1], [1, 2]], n)
}

/// The homomorphism `psi: G -> G` together with its dual `phi` on characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupHom {
    phi_v: Mat2,
    psi_std: Mat2,
}

impl GroupHom {
    /// From the matrix of `phi` in the `(v1, v2)` basis.
    pub fn from_phi_v(phi_v: Mat2) -> Result<Self> {
        let n = phi_v.modulus();
        let phi_std = v_basis_to_standard(n)?
            .mul(&phi_v)
            .mul(&standard_to_v_basis(n));
        Ok(GroupHom {
            phi_v,
            psi_std: phi_std.transpose(),
        })
    }

    /// From the matrix of `psi` on `G` in standard coordinates.
    pub fn from_psi_std(psi_std: Mat2) -> Result<Self> {
        let n = psi_std.modulus();
        let phi_v = standard_to_v_basis(n)
            .mul(&psi_std.transpose())
            .mul(&v_basis_to_standard(n)?);
        Ok(GroupHom { phi_v, psi_std })
    }

    pub fn phi_v(&self) -> Mat2 {
        self.phi_v
    }

    pub fn psi_std(&self) -> Mat2 {
        self.psi_std
    }

    pub fn modulus(&self) -> Modulus {
        self.phi_v.modulus()
    }

    /// `phi(chi)` in v-coordinates.
    #[inline]
    pub fn phi(&self, chi: CharacterV) -> CharacterV {
        let (s, t) = chi.coords();
        let (s, t) = self.phi_v.apply(s, t);
        CharacterV::new(s as i64, t as i64, chi.modulus())
    }

    /// `psi(g)` for `g` in standard coordinates.
    #[inline]
    pub fn psi(&self, g: (u32, u32)) -> (u32, u32) {
        self.psi_std.apply(g.0, g.1)
    }

    pub fn is_invertible(&self) -> bool {
        self.psi_std.is_invertible()
    }

    /// `(lambda, mu)` when `phi` is diagonal in the v-basis.
    pub fn diagonal_entries(&self) -> Option<(Residue, Residue)> {
        let [[_, b], [c, _]] = self.phi_v.rows();
        (b == 0 && c == 0).then(|| (self.phi_v.entry(0, 0), self.phi_v.entry(1, 1)))
    }
}

/// `phi = diag(lambda, mu)` in the v-basis.
pub fn diagonal_hom(lambda: Residue, mu: Residue, n: Modulus) -> Result<GroupHom> {
    for x in [lambda, mu] {
        if x.modulus() != n {
            return Err(Error::ModulusMismatch {
                left: x.modulus().get(),
                right: n.get(),
            });
        }
        if !x.is_unit() {
            return Err(Error::NotAUnit {
                value: x.value(),
                modulus: n.get(),
            });
        }
    }
    GroupHom::from_phi_v(Mat2::diagonal(lambda, mu))
}

pub fn psi_standard_matrix(hom: &GroupHom) -> Mat2 {
    hom.psi_std()
}

/// The union of the subgroups generated by `(1,0)`, `(0,1)`, `(1,1)`:
/// exactly the elements of `G` with a fixed point on the Fermat curve.
pub fn sigma_set(n: Modulus) -> Vec<(u32, u32)> {
    let mut members = SigmaTable::new(n).members();
    members.sort_unstable();
    members
}

struct SigmaTable {
    n: u32,
    member: Vec<bool>,
}

impl SigmaTable {
    fn new(n: Modulus) -> Self {
        let n = n.get();
        let mut member = vec![false; (n * n) as usize];
        for generator in [(1, 0), (0, 1), (1, 1)] {
            let mut g = (0u32, 0u32);
            for _ in 0..n {
                member[(g.0 * n + g.1) as usize] = true;
                g = ((g.0 + generator.0) % n, (g.1 + generator.1) % n);
            }
        }
        SigmaTable { n, member }
    }

    #[inline]
    fn contains(&self, g: (u32, u32)) -> bool {
        self.member[(g.0 * self.n + g.1) as usize]
    }

    fn members(&self) -> Vec<(u32, u32)> {
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .filter(|&g| self.contains(g))
            .collect()
    }
}

/// Whether `(Id x psi)(G)` acts freely on `C x C`: no nonzero `g` in `Sigma`
/// has `psi(g)` in `Sigma` (which contains `0`).
pub fn is_free_action(hom: &GroupHom, n: Modulus) -> bool {
    let sigma = SigmaTable::new(n);
    sigma
        .members()
        .into_iter()
        .filter(|&g| g != (0, 0))
        .all(|g| !sigma.contains(hom.psi(g)))
}

/// One of the seven residues whose invertibility is equivalent to freeness
/// for diagonal `phi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitCondition {
    pub expr: String,
    pub value: u32,
    pub is_unit: bool,
}

const SEVEN_CONDITIONS: [(&str, i64, i64); 7] = [
    ("lambda", 1, 0),
    ("mu", 0, 1),
    ("lambda - 4mu", 1, -4),
    ("lambda - mu", 1, -1),
    ("mu - 4lambda", -4, 1),
    ("lambda + 2mu", 1, 2),
    ("2lambda + mu", 2, 1),
];

pub fn seven_conditions(lambda: Residue, mu: Residue, n: Modulus) -> Vec<UnitCondition> {
    let (l, u) = (lambda.value() as i64, mu.value() as i64);
    SEVEN_CONDITIONS
        .iter()
        .map(|&(expr, a, b)| {
            let value = n.residue(a * l + b * u);
            UnitCondition {
                expr: expr.to_owned(),
                value: value.value(),
                is_unit: value.is_unit(),
            }
        })
        .collect()
}

pub fn seven_unit_conditions(lambda: Residue, mu: Residue, n: Modulus) -> bool {
    seven_conditions(lambda, mu, n).iter().all(|c| c.is_unit)
}

/// A surface `(C x C) / (Id x psi)(G)` with `K_S = rL`, `r = n - 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceConfig {
    n: Modulus,
    hom: GroupHom,
    free: bool,
    r: u32,
}

impl SurfaceConfig {
    pub fn new(hom: GroupHom) -> Result<Self> {
        let n = hom.modulus();
        n.require_surface()?;
        Ok(SurfaceConfig {
            n,
            hom,
            free: is_free_action(&hom, n),
            r: n.get() - 3,
        })
    }

    pub fn diagonal(n: Modulus, lambda: i64, mu: i64) -> Result<Self> {
        SurfaceConfig::new(diagonal_hom(n.residue(lambda), n.residue(mu), n)?)
    }

    pub fn n(&self) -> Modulus {
        self.n
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    pub fn is_free(&self) -> bool {
        self.free
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn require_free(&self) -> Result<()> {
        if self.free {
            Ok(())
        } else {
            Err(Error::NotFree)
        }
    }

    fn check_degree(&self, m: u32) -> Result<()> {
        if m > self.r {
            Err(Error::DegreeOutOfRange {
                degree: m,
                max: self.r,
            })
        } else {
            Ok(())
        }
    }
}

/// Which Künneth summand an `H^1` invariant comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `H^0(m) (x) H^1(m)`: `chi = phi(chi')`.
    ChiEqPhiChiprime,
    /// `H^1(m) (x) H^0(m)`: `chi' = phi(chi)`.
    ChiprimeEqPhiChi,
}

impl Direction {
    pub fn holds(self, hom: &GroupHom, chi: CharacterV, chi_prime: CharacterV) -> bool {
        match self {
            Direction::ChiEqPhiChiprime => chi == hom.phi(chi_prime),
            Direction::ChiprimeEqPhiChi => chi_prime == hom.phi(chi),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::ChiEqPhiChiprime => "chi = phi(chi')",
            Direction::ChiprimeEqPhiChi => "chi' = phi(chi)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct H1Witness {
    pub deg_m: Monomial,
    pub deg_mprime: Monomial,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Count {
    pub dimension: u64,
    pub witnesses: Vec<H1Witness>,
}

fn image_multiset(hom: &GroupHom, degree: u32, n: Modulus) -> Result<HashMap<CharacterV, u64>> {
    let mut counts = HashMap::new();
    for chi in h0_eigenbasis(degree, n)?.characters() {
        *counts.entry(hom.phi(chi)).or_insert(0) += 1;
    }
    Ok(counts)
}

fn image_index(
    hom: &GroupHom,
    degree: u32,
    n: Modulus,
) -> Result<HashMap<CharacterV, Vec<Monomial>>> {
    let mut index: HashMap<_, Vec<_>> = HashMap::new();
    for &(mon, chi) in h0_eigenbasis(degree, n)?.entries() {
        index.entry(hom.phi(chi)).or_default().push(mon);
    }
    Ok(index)
}

fn probe(counts: &HashMap<CharacterV, u64>, keys: impl Iterator<Item = CharacterV>) -> u64 {
    keys.map(|k| counts.get(&k).copied().unwrap_or(0)).sum()
}

/// `h^1(S, mL)` by keyed lookup, without collecting witnesses.
pub fn h1_dimension(m: u32, cfg: &SurfaceConfig) -> Result<u64> {
    cfg.check_degree(m)?;
    let n = cfg.n;
    let dual = cfg.r - m;
    let forward = image_multiset(&cfg.hom, dual, n)?;
    let backward = image_multiset(&cfg.hom, m, n)?;
    Ok(probe(&forward, h0_eigenbasis(m, n)?.characters())
        + probe(&backward, h0_eigenbasis(dual, n)?.characters()))
}

/// `h^1(S, mL)` together with every contributing character pair.
pub fn h1_surface(m: u32, cfg: &SurfaceConfig) -> Result<H1Count> {
    cfg.check_degree(m)?;
    let n = cfg.n;
    let dual = cfg.r - m;
    let mut witnesses = Vec::new();

    let forward = image_index(&cfg.hom, dual, n)?;
    for &(mon, chi) in h0_eigenbasis(m, n)?.entries() {
        for &mon_prime in forward.get(&chi).into_iter().flatten() {
            witnesses.push(H1Witness {
                deg_m: mon,
                deg_mprime: mon_prime,
                direction: Direction::ChiEqPhiChiprime,
            });
        }
    }

    let backward = image_index(&cfg.hom, m, n)?;
    for &(mon_prime, chi_prime) in h0_eigenbasis(dual, n)?.entries() {
        for &mon in backward.get(&chi_prime).into_iter().flatten() {
            witnesses.push(H1Witness {
                deg_m: mon,
                deg_mprime: mon_prime,
                direction: Direction::ChiprimeEqPhiChi,
            });
        }
    }

    Ok(H1Count {
        dimension: witnesses.len() as u64,
        witnesses,
    })
}

/// `h^0(S, mL) = #{(chi, tau) : chi + phi(tau) = 0}`.
pub fn h0_surface(m: u32, cfg: &SurfaceConfig) -> Result<u64> {
    cfg.check_degree(m)?;
    let images = image_multiset(&cfg.hom, m, cfg.n)?;
    Ok(probe(
        &images,
        h0_eigenbasis(m, cfg.n)?.characters().map(|chi| -chi),
    ))
}

/// Direct double-loop counters, kept independent of the keyed lookups.
pub mod naive {
    use super::*;

    pub fn h1_dimension(m: u32, cfg: &SurfaceConfig) -> Result<u64> {
        cfg.check_degree(m)?;
        let n = cfg.n;
        let low = h0_eigenbasis(m, n)?;
        let high = h0_eigenbasis(cfg.r - m, n)?;
        let mut count = 0;
        for chi in low.characters() {
            for chi_prime in high.characters() {
                if chi == cfg.hom.phi(chi_prime) {
                    count += 1;
                }
                if chi_prime == cfg.hom.phi(chi) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    pub fn h0_dimension(m: u32, cfg: &SurfaceConfig) -> Result<u64> {
        cfg.check_degree(m)?;
        let basis = h0_eigenbasis(m, cfg.n)?;
        let mut count = 0;
        for chi in basis.characters() {
            for tau in basis.characters() {
                if (chi + cfg.hom.phi(tau)).is_zero() {
                    count += 1;
                }
            }
        }
        Ok(count)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceNumerics {
    pub l_sq: i64,
    pub k_sq: i64,
    pub chi_o: i64,
    pub r: u32,
}

/// `L^2 = 2`, `K^2 = 2 r^2`, `chi(O_S) = (1 - g)^2 / n^2`.
pub fn surface_numerics(n: Modulus) -> Result<SurfaceNumerics> {
    n.require_surface()?;
    let g = genus(n);
    let numerator = (g - 1) * (g - 1);
    let denominator = (n.get() as u64).pow(2);
    if !numerator.is_multiple_of(denominator) {
        return Err(Error::NonIntegralChi {
            numerator,
            denominator,
        });
    }
    let r = n.get() - 3;
    let l_sq = 2;
    Ok(SurfaceNumerics {
        l_sq,
        k_sq: l_sq * (r as i64).pow(2),
        chi_o: (numerator / denominator) as i64,
        r,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomRow {
    pub m: u32,
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub chi: i64,
}

impl CohomRow {
    /// `h0 - h1 + h2`.
    pub fn alternating_sum(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }

    pub fn satisfies_riemann_roch(&self) -> bool {
        self.alternating_sum() == self.chi
    }
}

/// `chi(O_S(mL)) = chi(O_S) + m (m - r)`.
pub fn euler_characteristic(m: i64, numerics: &SurfaceNumerics) -> i64 {
    numerics.chi_o + numerics.l_sq * m * (m - numerics.r as i64) / 2
}

pub fn cohomology_row(m: u32, cfg: &SurfaceConfig) -> Result<CohomRow> {
    let numerics = surface_numerics(cfg.n)?;
    let chi = euler_characteristic(m as i64, &numerics);
    if m > cfg.r {
        // h1 = h2 = 0 above the canonical degree
        return Ok(CohomRow {
            m,
            h0: chi as u64,
            h1: 0,
            h2: 0,
            chi,
        });
    }
    Ok(CohomRow {
        m,
        h0: h0_surface(m, cfg)?,
        h1: h1_dimension(m, cfg)?,
        h2: h0_surface(cfg.r - m, cfg)?,
        chi,
    })
}

/// Rows for every `m` in `range`, computed in parallel and returned in order.
pub fn cohomology_table(
    cfg: &SurfaceConfig,
    range: std::ops::RangeInclusive<u32>,
) -> Result<Vec<CohomRow>> {
    range
        .into_par_iter()
        .map(|m| cohomology_row(m, cfg))
        .collect()
}

/// `q(S) = h^1(O_S)`.
pub fn irregularity(cfg: &SurfaceConfig) -> Result<u64> {
    h1_dimension(0, cfg)
}

/// `p_g(S) = h^0(K_S)`.
pub fn geometric_genus(cfg: &SurfaceConfig) -> Result<u64> {
    h0_surface(cfg.r, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u32) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn diag(n: u32, l: i64, u: i64) -> GroupHom {
        let n = m(n);
        diagonal_hom(n.residue(l), n.residue(u), n).unwrap()
    }

    #[test]
    fn diagonal_hom_examples() {
        assert_eq!(diag(7, 1, 1).psi_std(), Mat2::identity(m(7)));
        assert_eq!(diag(7, 1, 2).psi_std().rows(), [[3, 3], [4, 0]]);
        assert_eq!(diag(7, 2, 2).psi_std().rows(), [[2, 0], [0, 2]]);
    }

    #[test]
    fn diagonal_hom_rejects_non_units() {
        let n = m(35);
        assert!(matches!(
            diagonal_hom(n.residue(5), n.residue(1), n),
            Err(Error::NotAUnit { value: 5, .. })
        ));
        let n7 = m(7);
        assert!(diagonal_hom(n7.residue(0), n7.residue(1), n7).is_err());
    }

    #[test]
    fn closed_form_entry() {
        let n = m(11);
        let third = inv3(n).unwrap();
        for (l, u) in [(2, 5), (3, 7), (10, 1)] {
            let psi = diag(11, l, u).psi_std();
            assert_eq!(psi.entry(0, 0), n.residue(4 * l - u) * third);
        }
    }

    #[test]
    fn swap_is_self_dual() {
        let n = m(7);
        let swap = Mat2::new([[0, 1], [1, 0]], n);
        let hom = GroupHom::from_psi_std(swap).unwrap();
        // conjugate the std-basis phi = swap^T = swap into the v-basis by hand
        let to_v = Mat2::new([[2, 1], [1, 2]], n);
        let from_v = Mat2::new([[2, -1], [-1, 2]], n).scale(inv3(n).unwrap());
        assert_eq!(hom.phi_v(), to_v.mul(&swap).mul(&from_v));
        assert_eq!(GroupHom::from_phi_v(hom.phi_v()).unwrap().psi_std(), swap);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_set(m(7)).len(), 19);
        assert!(sigma_set(m(5)).contains(&(1, 1)));
        assert!(!sigma_set(m(7)).contains(&(1, 2)));
        for n in [5, 7, 11, 13, 25] {
            assert_eq!(sigma_set(m(n)).len() as u32, 3 * n - 2);
        }
    }

    #[test]
    fn identity_is_never_free() {
        for n in [5, 7, 11, 13] {
            assert!(!is_free_action(&diag(n, 1, 1), m(n)));
        }
    }

    #[test]
    fn zero_map_is_not_free() {
        let n = m(7);
        let hom = GroupHom::from_psi_std(Mat2::new([[0, 0], [0, 0]], n)).unwrap();
        assert!(!is_free_action(&hom, n));
    }

    #[test]
    fn seven_conditions_examples() {
        let n = m(7);
        assert!(!seven_unit_conditions(n.residue(1), n.residue(1), n));
        let n5 = m(5);
        let conds = seven_conditions(n5.residue(1), n5.residue(2), n5);
        let plus = conds.iter().find(|c| c.expr == "lambda + 2mu").unwrap();
        assert_eq!(plus.value, 0);
        assert!(!plus.is_unit);
        assert!(!seven_unit_conditions(n5.residue(1), n5.residue(2), n5));
    }

    #[test]
    fn seven_conditions_match_freeness_mod_seven() {
        let n = m(7);
        let mut by_conditions = 0;
        let mut by_sets = 0;
        for l in n.units() {
            for u in n.units() {
                by_conditions += seven_unit_conditions(l, u, n) as u32;
                by_sets += is_free_action(&diagonal_hom(l, u, n).unwrap(), n) as u32;
            }
        }
        assert!(by_conditions > 0);
        assert_eq!(by_conditions, by_sets);
    }

    #[test]
    fn numerics() {
        let s = |n| surface_numerics(m(n)).unwrap();
        assert_eq!(
            s(5),
            SurfaceNumerics {
                l_sq: 2,
                k_sq: 8,
                chi_o: 1,
                r: 2
            }
        );
        assert_eq!(
            s(7),
            SurfaceNumerics {
                l_sq: 2,
                k_sq: 32,
                chi_o: 4,
                r: 4
            }
        );
        assert_eq!(
            s(11),
            SurfaceNumerics {
                l_sq: 2,
                k_sq: 128,
                chi_o: 16,
                r: 8
            }
        );
        assert!(surface_numerics(m(9)).is_err());
    }

    fn first_free(n: u32) -> SurfaceConfig {
        let n = m(n);
        n.units()
            .flat_map(|l| n.units().map(move |u| (l, u)))
            .map(|(l, u)| SurfaceConfig::new(diagonal_hom(l, u, n).unwrap()).unwrap())
            .find(|cfg| cfg.is_free())
            .unwrap()
    }

    #[test]
    fn structure_sheaf_row() {
        let cfg = first_free(7);
        let row = cohomology_row(0, &cfg).unwrap();
        assert_eq!(
            row,
            CohomRow {
                m: 0,
                h0: 1,
                h1: 0,
                h2: 3,
                chi: 4
            }
        );
        assert_eq!(geometric_genus(&cfg).unwrap(), 3);
        assert_eq!(irregularity(&cfg).unwrap(), 0);
    }

    #[test]
    fn rows_above_canonical_degree() {
        let cfg = first_free(7);
        let row = cohomology_row(5, &cfg).unwrap();
        assert_eq!(
            row,
            CohomRow {
                m: 5,
                h0: 9,
                h1: 0,
                h2: 0,
                chi: 9
            }
        );
    }

    #[test]
    fn degree_range_is_checked() {
        let cfg = first_free(7);
        assert!(h1_surface(5, &cfg).is_err());
        assert!(h0_surface(5, &cfg).is_err());
        assert!(naive::h1_dimension(5, &cfg).is_err());
    }

    #[test]
    fn witnesses_satisfy_their_equation() {
        let cfg = first_free(11);
        let n = cfg.n();
        for deg in 0..=cfg.r() {
            let count = h1_surface(deg, &cfg).unwrap();
            assert_eq!(count.dimension, h1_dimension(deg, &cfg).unwrap());
            for w in &count.witnesses {
                assert_eq!(w.deg_m.degree(), deg);
                assert_eq!(w.deg_mprime.degree(), cfg.r() - deg);
                let chi = crate::characters::monomial_character(w.deg_m, n);
                let chi_prime = crate::characters::monomial_character(w.deg_mprime, n);
                assert!(w.direction.holds(cfg.hom(), chi, chi_prime));
            }
        }
    }

    #[test]
    fn matrix_enumeration() {
        let n = m(5);
        let all: Vec<_> = Mat2::all(n).collect();
        assert_eq!(all.len(), 625);
        assert_eq!(all[0].rows(), [[0, 0], [0, 0]]);
        assert_eq!(all[1].rows(), [[0, 0], [0, 1]]);
        assert_eq!(all[624].rows(), [[4, 4], [4, 4]]);
    }
}
