//! Equivariant cohomology of `O_C(m)` on the Fermat curve `x^n + y^n + z^n = 0`.
//!
//! For `0 <= m <= n - 3` the monomials of degree `m` form an eigenbasis of
//! `H^0(O_C(m))` with pairwise distinct characters, and by Serre duality the
//! characters of `H^1(O_C(m))` are the negatives of the degree `n - 3 - m`
//! monomial characters.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::arithmetic::Modulus;
use crate::characters::{monomial_character, CharacterV, Monomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenBasis {
    degree: u32,
    entries: Vec<(Monomial, CharacterV)>,
}

impl EigenBasis {
    fn compute(m: u32, n: Modulus) -> Self {
        let entries = Monomial::of_degree(m)
            .map(|mon| (mon, monomial_character(mon, n)))
            .collect();
        EigenBasis { degree: m, entries }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn entries(&self) -> &[(Monomial, CharacterV)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn characters(&self) -> impl Iterator<Item = CharacterV> + '_ {
        self.entries.iter().map(|&(_, chi)| chi)
    }
}

type Cache = RwLock<HashMap<(Modulus, u32), Arc<EigenBasis>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_degree(m: u32, n: Modulus) -> Result<()> {
    let max = n.get() - 3;
    if m > max {
        Err(Error::DegreeOutOfRange { degree: m, max })
    } else {
        Ok(())
    }
}

/// Eigenbasis of `H^0(O_C(m))`, memoized per `(n, m)`.
pub fn h0_eigenbasis(m: u32, n: Modulus) -> Result<Arc<EigenBasis>> {
    check_degree(m, n)?;
    if let Some(basis) = cache().read().unwrap().get(&(n, m)) {
        return Ok(Arc::clone(basis));
    }
    let basis = Arc::new(EigenBasis::compute(m, n));
    let mut map = cache().write().unwrap();
    Ok(Arc::clone(map.entry((n, m)).or_insert(basis)))
}

/// Characters of `H^1(O_C(m))`, in the order of the dual degree's eigenbasis.
pub fn h1_characters(m: u32, n: Modulus) -> Result<Vec<CharacterV>> {
    check_degree(m, n)?;
    let dual = h0_eigenbasis(n.get() - 3 - m, n)?;
    Ok(dual.characters().map(|chi| -chi).collect())
}

/// `(n - 1)(n - 2) / 2`.
pub fn genus(n: Modulus) -> u64 {
    let n = n.get() as u64;
    (n - 1) * (n - 2) / 2
}
