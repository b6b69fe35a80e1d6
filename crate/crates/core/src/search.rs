//! Witness search for `H^1(S, mL) != 0`, certificates and their verification.
//!
//! The diagonal recipe: pick `u in {1, 2, 3}` with `u = m (mod 3)` and the
//! degree-`m` monomial `x^{m-2c} y^c z^c`, `c = (m - u) / 3`, whose character
//! is `u v1`. Do the same in the dual degree `m' = n - 3 - m` to get `u' v1`.
//! Then `phi = diag(u / u', mu)` maps the second character onto the first for
//! every `mu`, and `mu` is chosen as the least unit making the action free.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arithmetic::{Modulus, Residue};
use crate::characters::{monomial_character, Monomial};
use crate::error::{Error, Result};
use crate::surface::{
    self, cohomology_row, diagonal_hom, h1_dimension, h1_surface, irregularity, is_free_action,
    seven_conditions, seven_unit_conditions, surface_numerics, Direction, GroupHom, Mat2,
    SurfaceConfig, SurfaceNumerics, UnitCondition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    DiagonalRecipe,
    Exhaustive,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::DiagonalRecipe => "diagonal_recipe",
            Strategy::Exhaustive => "exhaustive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateWitness {
    pub deg_m: Monomial,
    pub deg_mprime: Monomial,
    pub direction: Direction,
}

/// A self-contained proof that `h^1(S, mL) >= h1_claimed` for the surface
/// given by `phi = diag(lambda, mu)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: u32,
    pub m: u32,
    pub lambda: u32,
    pub mu: u32,
    pub psi_std: [[u32; 2]; 2],
    pub witness: CertificateWitness,
    pub h1_claimed: u64,
    pub seven_conditions: Vec<UnitCondition>,
    pub strategy: Strategy,
}

fn check_degree(n: Modulus, m: u32) -> Result<()> {
    if m >= 1 && m + 4 <= n.get() {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!(
            "m = {m} must lie in [1, {}]",
            n.get() - 4
        )))
    }
}

/// The least `u in {1, 2, 3}` with `u = m (mod 3)` and the monomial
/// `x^{m - 2c} y^c z^c`, `c = (m - u) / 3`, of character `u v1`.
pub fn recipe_monomial(m: u32) -> (u32, Monomial) {
    assert!(m >= 1, "recipe needs a positive degree");
    let u = (m - 1) % 3 + 1;
    let c = (m - u) / 3;
    (u, Monomial::new(m - 2 * c, c, c))
}

fn certificate(
    cfg: &SurfaceConfig,
    m: u32,
    witness: CertificateWitness,
    strategy: Strategy,
) -> Result<Certificate> {
    let n = cfg.n();
    let (lambda, mu) = cfg
        .hom()
        .diagonal_entries()
        .expect("certificates are issued for diagonal phi only");
    Ok(Certificate {
        n: n.get(),
        m,
        lambda: lambda.value(),
        mu: mu.value(),
        psi_std: cfg.hom().psi_std().rows(),
        witness,
        h1_claimed: h1_dimension(m, cfg)?,
        seven_conditions: seven_conditions(lambda, mu, n),
        strategy,
    })
}

/// Build a certificate by the diagonal recipe, falling back to
/// [`find_witness_exhaustive`] if no `mu` passes the seven conditions.
pub fn find_witness(n: Modulus, m: u32) -> Result<Certificate> {
    n.require_theorem()?;
    check_degree(n, m)?;
    let m_prime = n.get() - 3 - m;
    let (u, deg_m) = recipe_monomial(m);
    let (u_prime, deg_mprime) = recipe_monomial(m_prime);
    let lambda = n.residue(u as i64) * n.residue(u_prime as i64).inverse()?;

    let Some(mu) = n.units().find(|&mu| seven_unit_conditions(lambda, mu, n)) else {
        return find_witness_exhaustive(n, m);
    };
    let cfg = SurfaceConfig::new(diagonal_hom(lambda, mu, n)?)?;
    let witness = CertificateWitness {
        deg_m,
        deg_mprime,
        direction: Direction::ChiEqPhiChiprime,
    };
    debug_assert!(witness.direction.holds(
        cfg.hom(),
        monomial_character(deg_m, n),
        monomial_character(deg_mprime, n)
    ));
    certificate(&cfg, m, witness, Strategy::DiagonalRecipe)
}

/// The lexicographically least free diagonal `(lambda, mu)` with
/// `h^1(mL) > 0`, witnessed by its first contributing pair. Only needs
/// `gcd(n, 6) = 1`.
pub fn find_witness_exhaustive(n: Modulus, m: u32) -> Result<Certificate> {
    let report = exhaustive_search(n, m)?;
    let Some(hit) = report.found.iter().find(|f| f.free && f.h1 > 0) else {
        return Err(Error::NoWitness { n: n.get(), m });
    };
    let cfg = SurfaceConfig::diagonal(n, hit.lambda as i64, hit.mu as i64)?;
    let first = h1_surface(m, &cfg)?.witnesses[0];
    let witness = CertificateWitness {
        deg_m: first.deg_m,
        deg_mprime: first.deg_mprime,
        direction: first.direction,
    };
    certificate(&cfg, m, witness, Strategy::Exhaustive)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub lambda: u32,
    pub mu: u32,
    pub h1: u64,
    pub free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: u32,
    pub m: u32,
    pub strategy: Strategy,
    pub found: Vec<SearchHit>,
}

fn unit_pairs(n: Modulus) -> Vec<(Residue, Residue)> {
    n.units()
        .flat_map(|l| n.units().map(move |u| (l, u)))
        .collect()
}

/// Every unit pair passing the seven conditions, with `h^1(mL)`, sorted by
/// `(lambda, mu)`.
pub fn exhaustive_search(n: Modulus, m: u32) -> Result<SearchReport> {
    n.require_surface()?;
    check_degree(n, m)?;
    let found = unit_pairs(n)
        .into_par_iter()
        .filter(|&(l, u)| seven_unit_conditions(l, u, n))
        .map(|(l, u)| {
            let cfg = SurfaceConfig::new(diagonal_hom(l, u, n)?)?;
            Ok(SearchHit {
                lambda: l.value(),
                mu: u.value(),
                h1: h1_dimension(m, &cfg)?,
                free: cfg.is_free(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchReport {
        n: n.get(),
        m,
        strategy: Strategy::Exhaustive,
        found,
    })
}

/// The recipe's `(lambda, mu)` packaged as a one-entry report.
pub fn recipe_search(n: Modulus, m: u32) -> Result<SearchReport> {
    let cert = find_witness(n, m)?;
    Ok(SearchReport {
        n: n.get(),
        m,
        strategy: cert.strategy,
        found: vec![SearchHit {
            lambda: cert.lambda,
            mu: cert.mu,
            h1: cert.h1_claimed,
            free: true,
        }],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub valid: bool,
    pub reasons: Vec<String>,
}

/// `3^{-1} [[4l - u, 2(u - l)], [2(l - u), 4u - l]]`, written out directly.
fn closed_form_psi(n: Modulus, l: i64, u: i64) -> Option<[[u32; 2]; 2]> {
    let third = n.residue(3).inverse().ok()?.value() as i64;
    let e = |x: i64| n.reduce(third * n.reduce(x) as i64);
    Some([
        [e(4 * l - u), e(2 * (u - l))],
        [e(2 * (l - u)), e(4 * u - l)],
    ])
}

/// Re-check a certificate from scratch. Freeness is tested on `Sigma`
/// directly and `h^1` is recounted with the double-loop counter.
pub fn verify_certificate(cert: &Certificate) -> Verification {
    let mut reasons = Vec::new();
    let valid = verify_into(cert, &mut reasons);
    Verification {
        valid: valid && reasons.is_empty(),
        reasons,
    }
}

fn verify_into(cert: &Certificate, reasons: &mut Vec<String>) -> bool {
    let n = match Modulus::new(cert.n) {
        Ok(n) => n,
        Err(e) => {
            reasons.push(e.to_string());
            return false;
        }
    };
    if let Err(e) = n.require_surface() {
        reasons.push(e.to_string());
        return false;
    }
    if let Err(e) = check_degree(n, cert.m) {
        reasons.push(e.to_string());
        return false;
    }
    let m = cert.m;
    let m_prime = n.get() - 3 - m;
    let w = &cert.witness;
    if w.deg_m.degree() != m {
        reasons.push(format!("witness {} does not have degree {m}", w.deg_m));
    }
    if w.deg_mprime.degree() != m_prime {
        reasons.push(format!(
            "witness {} does not have degree {m_prime}",
            w.deg_mprime
        ));
    }

    let (l, u) = (cert.lambda as i64, cert.mu as i64);
    let lambda = n.residue(l);
    let mu = n.residue(u);
    if cert.lambda >= n.get() || cert.mu >= n.get() {
        reasons.push("lambda and mu must be canonical residues".into());
    }
    for (name, x) in [("lambda", lambda), ("mu", mu)] {
        if !x.is_unit() {
            reasons.push(format!("{name} = {x} is not a unit mod {n}"));
        }
    }
    if closed_form_psi(n, l, u) != Some(cert.psi_std) {
        reasons.push("psi_std does not match diag(lambda, mu)".into());
    }
    let recomputed = seven_conditions(lambda, mu, n);
    if recomputed != cert.seven_conditions {
        reasons.push("recorded unit conditions do not match".into());
    }
    if !recomputed.iter().all(|c| c.is_unit) {
        reasons.push("unit conditions fail".into());
    }
    if !reasons.is_empty() {
        return false;
    }

    let hom = match GroupHom::from_psi_std(Mat2::from_rows(cert.psi_std, n)) {
        Ok(hom) => hom,
        Err(e) => {
            reasons.push(e.to_string());
            return false;
        }
    };
    if !is_free_action(&hom, n) {
        reasons.push("action on C x C is not free".into());
    }
    let chi = monomial_character(w.deg_m, n);
    let chi_prime = monomial_character(w.deg_mprime, n);
    if !w.direction.holds(&hom, chi, chi_prime) {
        reasons.push(format!("witness pair does not satisfy {}", w.direction));
    }
    if cert.h1_claimed == 0 {
        reasons.push("h1_claimed must be positive".into());
    }
    let cfg = match SurfaceConfig::new(hom) {
        Ok(cfg) => cfg,
        Err(e) => {
            reasons.push(e.to_string());
            return false;
        }
    };
    match surface::naive::h1_dimension(m, &cfg) {
        Ok(h1) if h1 >= cert.h1_claimed => {}
        Ok(h1) => reasons.push(format!(
            "recomputed h1 = {h1} is below the claimed {}",
            cert.h1_claimed
        )),
        Err(e) => reasons.push(e.to_string()),
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Beauville5Row {
    pub psi_std: [[u32; 2]; 2],
    pub invertible: bool,
    pub q: u64,
    pub p_g: u64,
    pub h0_l: u64,
    pub h1_l: u64,
    pub h2_l: u64,
    pub chi_l: i64,
    pub riemann_roch_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Beauville5Report {
    pub matrices_checked: u32,
    pub free_count: u32,
    pub invertible_free_count: u32,
    pub q_zero_count: u32,
    pub diagonal_pairs_checked: u32,
    pub diagonal_free_count: u32,
    pub numerics: SurfaceNumerics,
    pub rows: Vec<Beauville5Row>,
    pub claims_hold: bool,
}

/// Every `psi` over `Z/5` giving a free action, with `h^i(L)` for each.
/// On the regular ones (`q = 0`) the even surface with `K^2 = 8`, `p_g = 0`
/// must have `h^0(L) = h^1(L) = 0`.
pub fn beauville5_report() -> Result<Beauville5Report> {
    let n = Modulus::new(5)?;
    let numerics = surface_numerics(n)?;
    let matrices: Vec<Mat2> = Mat2::all(n).collect();
    let rows = matrices
        .par_iter()
        .map(|&psi| {
            let cfg = SurfaceConfig::new(GroupHom::from_psi_std(psi)?)?;
            if !cfg.is_free() {
                return Ok(None);
            }
            let row = cohomology_row(1, &cfg)?;
            let rr_holds = (0..=cfg.r())
                .all(|m| cohomology_row(m, &cfg).is_ok_and(|row| row.satisfies_riemann_roch()));
            Ok(Some(Beauville5Row {
                psi_std: psi.rows(),
                invertible: psi.is_invertible(),
                q: irregularity(&cfg)?,
                p_g: surface::geometric_genus(&cfg)?,
                h0_l: row.h0,
                h1_l: row.h1,
                h2_l: row.h2,
                chi_l: row.chi,
                riemann_roch_holds: rr_holds,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();

    let pairs = unit_pairs(n);
    let diagonal_free_count = pairs
        .iter()
        .filter(|&&(l, u)| diagonal_hom(l, u, n).is_ok_and(|hom| is_free_action(&hom, n)))
        .count() as u32;

    let regular: Vec<_> = rows.iter().filter(|r| r.q == 0).collect();
    let claims_hold = !rows.is_empty()
        && diagonal_free_count == 0
        && !regular.is_empty()
        && (numerics.l_sq, numerics.k_sq, numerics.chi_o) == (2, 8, 1)
        && regular
            .iter()
            .all(|r| r.h0_l == 0 && r.h1_l == 0 && r.p_g == 0 && r.riemann_roch_holds);

    Ok(Beauville5Report {
        matrices_checked: matrices.len() as u32,
        free_count: rows.len() as u32,
        invertible_free_count: rows.iter().filter(|r| r.invertible).count() as u32,
        q_zero_count: regular.len() as u32,
        diagonal_pairs_checked: pairs.len() as u32,
        diagonal_free_count,
        numerics,
        rows,
        claims_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u32) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn recipe_for_seven_degree_one() {
        let cert = find_witness(m(7), 1).unwrap();
        assert_eq!(cert.witness.deg_m, Monomial::new(1, 0, 0));
        assert_eq!(cert.witness.deg_mprime, Monomial::new(3, 0, 0));
        assert_eq!(cert.lambda, 5);
        assert_eq!(cert.strategy, Strategy::DiagonalRecipe);
        assert!(cert.h1_claimed >= 1);
        assert!(verify_certificate(&cert).valid);
    }

    #[test]
    fn recipe_monomials() {
        assert_eq!(recipe_monomial(1), (1, Monomial::new(1, 0, 0)));
        assert_eq!(recipe_monomial(3), (3, Monomial::new(3, 0, 0)));
        assert_eq!(recipe_monomial(4), (1, Monomial::new(2, 1, 1)));
        assert_eq!(recipe_monomial(8), (2, Monomial::new(4, 2, 2)));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            find_witness(m(25), 1),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            find_witness(m(5), 1),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(find_witness(m(7), 0).is_err());
        assert!(find_witness(m(7), 4).is_err());
        assert!(exhaustive_search(m(9), 1).is_err());
    }

    #[test]
    fn tampered_certificates_fail() {
        let cert = find_witness(m(7), 2).unwrap();
        assert!(verify_certificate(&cert).valid);

        let mut bad_mu = cert.clone();
        bad_mu.mu = 0;
        let v = verify_certificate(&bad_mu);
        assert!(!v.valid);
        assert!(v.reasons.iter().any(|r| r.contains("mu = 0")));

        let mut bad_degree = cert.clone();
        bad_degree.witness.deg_m.a += 1;
        assert!(!verify_certificate(&bad_degree).valid);

        let mut overclaimed = cert.clone();
        overclaimed.h1_claimed += 1000;
        assert!(!verify_certificate(&overclaimed).valid);

        let mut bad_n = cert;
        bad_n.n = 9;
        assert!(!verify_certificate(&bad_n).valid);
    }

    #[test]
    fn exhaustive_mod_five_is_empty() {
        for deg in 1..=1 {
            assert!(exhaustive_search(m(5), deg).unwrap().found.is_empty());
        }
    }

    #[test]
    fn fallback_path_produces_verifiable_certificates() {
        let cert = find_witness_exhaustive(m(11), 3).unwrap();
        assert_eq!(cert.strategy, Strategy::Exhaustive);
        assert!(verify_certificate(&cert).valid);
    }
}
