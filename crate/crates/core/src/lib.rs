//! Exact construction of the quadratic-form representations
//!
//! * `4 F_p = u^2 - p v^2` for primes `p = 1 (mod 4)`,
//! * `4 F_p = 5 u^2 + p v^2` for primes `p = 3 (mod 4)`,
//!
//! obtained from the relative norm `Gamma = prod_{r in R} (alpha - beta zeta_p^r)`
//! of `alpha - beta zeta_p` down to `Q(sqrt 5, sqrt p*)`. Everything is exact:
//! `Gamma` lives in `Z[alpha][zeta_p]`, the Galois actions are coefficient
//! permutations, and coordinates are read off through the Gauss period.

pub mod cyclo;
pub mod error;
pub mod fib;
pub mod gamma;
pub mod modarith;
pub mod oracle;
pub mod pell;
pub mod represent;
pub mod zalpha;

pub use cyclo::{CycloPoly, ResidueDecomposition};
pub use error::{Error, Result};
pub use fib::{fib, fib_pair, FibPair};
pub use gamma::{
    compute_gamma, extract_k_coordinates, gauss_period_check, integral_basis_coords,
    verify_norm_product, verify_sigma5_relation, IntegralBasisCoords, KCoordinates, PrimeContext,
};
pub use pell::{
    cf_sqrt, fundamental_unit4, generate_solutions, norm_plus4_unit, orbit_step, reduce_in_orbit,
    CfExpansion, Direction, PellUnit,
};
pub use represent::{
    represent, represent_detailed, verify_representation, FormCase, Representation,
};
pub use zalpha::{Dyadic, ZAlpha};
