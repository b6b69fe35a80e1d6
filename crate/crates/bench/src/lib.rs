//! Shared fixtures for the criterion benchmarks.

use beauville_core::{find_witness, Modulus, SurfaceConfig};

/// The surface produced by the diagonal recipe for `(n, m)`.
pub fn witness_config(n: u32, m: u32) -> SurfaceConfig {
    let n = Modulus::new(n).expect("valid modulus");
    let cert = find_witness(n, m).expect("recipe succeeds");
    SurfaceConfig::diagonal(n, cert.lambda as i64, cert.mu as i64).expect("diagonal surface")
}
