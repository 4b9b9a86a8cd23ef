//! Exact membership tests, factorizations and elasticity for affine monoids
//! in the nonnegative quadrant with two or three generators.
//!
//! A monoid `S = <g_1, ..., g_p>` in `N_0^2` is normalized by a unimodular
//! change of coordinates so that its smallest-slope generator becomes
//! `(0, 1)`:
//!
//! * two generators: `<(0,1), (a,b)>` ([`solve2`]) has unique factorization;
//! * three generators: `<(0,1), (a,b), (c,d)>` ([`solve3`]) has closed forms
//!   for membership, extreme factorizations and elasticity when
//!   `bc - ad = 1`, and an exact enumeration otherwise;
//! * [`asymptotics`] gives the elasticity of the multiples `k*s`, exactly for
//!   periodic `k` and in the limit `k -> infinity`.
//!
//! All arithmetic is arbitrary precision. [`oracle`] is an independent
//! brute-force enumerator used to check every closed form.
//!
//! ```
//! use affine_elasticity::{solve3, CanonicalMonoid3, ExtRat, vec2};
//!
//! let m = CanonicalMonoid3::new(1, 2, 3, 5).unwrap();
//! assert!(m.star());
//! let rho = solve3::elasticity3(&m, &vec2(6, 13)).unwrap();
//! assert_eq!(rho, ExtRat::new(7, 5).unwrap());
//! ```

pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod intlin;
pub mod monoid;
pub mod oracle;
pub mod ratq;
pub mod solve2;
pub mod solve3;

pub use error::{Error, Result};
pub use factorization::Factorization;
pub use intlin::{Mat2xP, UniMat2};
pub use monoid::{canonicalize, Canonical, CanonicalMonoid2, CanonicalMonoid3, RawMonoid};
pub use ratq::{phi, vec2, ExtRat, Vec2};
