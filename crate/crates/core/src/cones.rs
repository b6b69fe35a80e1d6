//! Graded cones `R(S, dL) = ⊕_{i >= 0} H^0(S, idL)` over a Beauville-type
//! surface.
//!
//! The cone over a regular surface is Cohen-Macaulay iff `H^1(S, idL)` vanishes
//! for every `i`. Outside `1 <= m <= r - 1` this holds automatically (Kodaira
//! vanishing, Serre duality and `q = 0`), so the verdict is a finite check.

use serde::{Deserialize, Serialize};

use crate::arithmetic::gcd;
use crate::error::{Error, Result};
use crate::surface::{cohomology_row, h1_dimension, irregularity, SurfaceConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CmVerdict {
    CohenMacaulay,
    /// Offending `(degree, h1)` pairs.
    NotCm {
        offenders: Vec<(u32, u64)>,
    },
}

impl CmVerdict {
    pub fn is_cohen_macaulay(&self) -> bool {
        matches!(self, CmVerdict::CohenMacaulay)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeReport {
    pub d: u32,
    pub hilbert: Vec<u64>,
    pub cm: CmVerdict,
    pub dualizing_order: u32,
    /// The canonical cone `d = r`; Gorenstein once it is Cohen-Macaulay.
    pub gorenstein_hint: bool,
}

fn check_polarization(d: u32) -> Result<()> {
    if d == 0 {
        Err(Error::PreconditionViolated(
            "polarization multiple d must be positive".into(),
        ))
    } else {
        Ok(())
    }
}

/// `h^0(S, i d L)` for `i = 0..=max_index`.
pub fn hilbert_function(cfg: &SurfaceConfig, d: u32, max_index: u32) -> Result<Vec<u64>> {
    cfg.require_free()?;
    check_polarization(d)?;
    (0..=max_index)
        .map(|i| Ok(cohomology_row(i * d, cfg)?.h0))
        .collect()
}

pub fn cm_verdict(cfg: &SurfaceConfig, d: u32) -> Result<CmVerdict> {
    cfg.require_free()?;
    check_polarization(d)?;
    let q = irregularity(cfg)?;
    if q != 0 {
        return Err(Error::PreconditionViolated(format!(
            "surface is irregular (q = {q})"
        )));
    }
    let r = cfg.r();
    let mut offenders = Vec::new();
    for m in (d..r).step_by(d as usize) {
        let h1 = h1_dimension(m, cfg)?;
        if h1 != 0 {
            offenders.push((m, h1));
        }
    }
    Ok(if offenders.is_empty() {
        CmVerdict::CohenMacaulay
    } else {
        CmVerdict::NotCm { offenders }
    })
}

/// Order of `K` on the punctured cone over `tL` when `K_S = rL`: the least
/// `j > 0` with `t | j r`.
pub fn dualizing_order(r: u32, t: u32) -> u32 {
    assert!(r >= 1 && t >= 1, "dualizing_order needs r, t >= 1");
    t / gcd(r as u64, t as u64) as u32
}

pub fn cone_report(cfg: &SurfaceConfig, d: u32, max_index: u32) -> Result<ConeReport> {
    Ok(ConeReport {
        d,
        hilbert: hilbert_function(cfg, d, max_index)?,
        cm: cm_verdict(cfg, d)?,
        dualizing_order: dualizing_order(cfg.r(), d),
        gorenstein_hint: d == cfg.r(),
    })
}

/// The cones over `L`, `K_S = rL` and `K_S + L = (r + 1)L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeCones {
    pub y: ConeReport,
    pub z: ConeReport,
    pub x: ConeReport,
}

pub fn three_cones_report(cfg: &SurfaceConfig, max_index: u32) -> Result<ThreeCones> {
    let r = cfg.r();
    Ok(ThreeCones {
        y: cone_report(cfg, 1, max_index)?,
        z: cone_report(cfg, r, max_index)?,
        x: cone_report(cfg, r + 1, max_index)?,
    })
}

/// The cone over `tL`, its canonical cover (the cone over `gcd(r, t) L`) and
/// whether the pair is Q-Gorenstein.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalCoverReport {
    pub t: u32,
    pub r: u32,
    /// `t > r` and `gcd(r, t) = 1`.
    pub hypotheses_hold: bool,
    pub cone: ConeReport,
    pub cover: ConeReport,
    pub q_gorenstein: bool,
}

pub fn canonical_cover_report(
    cfg: &SurfaceConfig,
    t: u32,
    max_index: u32,
) -> Result<CanonicalCoverReport> {
    check_polarization(t)?;
    let r = cfg.r();
    let cover_d = gcd(r as u64, t as u64) as u32;
    let cone = cone_report(cfg, t, max_index)?;
    let cover = cone_report(cfg, cover_d, max_index)?;
    let q_gorenstein = cone.cm.is_cohen_macaulay() && cover.cm.is_cohen_macaulay();
    Ok(CanonicalCoverReport {
        t,
        r,
        hypotheses_hold: t > r && cover_d == 1,
        cone,
        cover,
        q_gorenstein,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::Modulus;

    #[test]
    fn dualizing_order_examples() {
        assert_eq!(dualizing_order(4, 5), 5);
        assert_eq!(dualizing_order(4, 4), 1);
        assert_eq!(dualizing_order(6, 9), 3);
    }

    #[test]
    fn zero_polarization_is_rejected() {
        let n = Modulus::new(7).unwrap();
        let cfg = n
            .units()
            .flat_map(|l| n.units().map(move |u| (l, u)))
            .map(|(l, u)| SurfaceConfig::diagonal(n, l.value() as i64, u.value() as i64).unwrap())
            .find(|c| c.is_free())
            .unwrap();
        assert!(hilbert_function(&cfg, 0, 3).is_err());
        assert!(cm_verdict(&cfg, 0).is_err());
    }

    #[test]
    fn non_free_config_is_rejected() {
        let cfg = SurfaceConfig::diagonal(Modulus::new(7).unwrap(), 1, 1).unwrap();
        assert_eq!(cm_verdict(&cfg, 1), Err(Error::NotFree));
        assert_eq!(hilbert_function(&cfg, 1, 2), Err(Error::NotFree));
    }
}
