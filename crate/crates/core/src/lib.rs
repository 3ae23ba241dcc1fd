//! Exact computation with noisy Minkowski sums over Z/nZ.
//!
//! For sets `A, B, C` of Z/nZ the noisy sum is `A +_C B = A + B + C`, and
//! `k *_C A = kA + (k-1)C`. A set is C-(k,l)-sum-free when `k *_C A` and
//! `l *_C A` are disjoint. This crate evaluates the closed-form bounds on
//! the largest such set, builds extremal examples, and checks everything
//! against an exhaustive optimizer.
//!
//! ```
//! use noisysum::{brute_force_mu, bounds_prefix_noise, CyclicSet, SumFreeParams};
//!
//! let params = SumFreeParams::new(40, 9, 4).unwrap();
//! let noise = CyclicSet::parse(40, "0,1").unwrap();
//! assert_eq!(brute_force_mu(&params, &noise, 1).unwrap().mu, 2);
//!
//! let b = bounds_prefix_noise(40, 9, 4, 2).unwrap();
//! assert_eq!((b.lower, b.upper), (2, 3));
//! ```

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod cyclic;
pub mod equivalence;
pub mod error;
pub mod sumfree;
pub mod verify;

pub use bounds::{
    bajnok_matzke, bajnok_matzke_terms, bier_chin_prime, bounds_for_noise, bounds_prefix_noise,
    bounds_two_element, bounds_zero_p, chi, diamanda_yap, hamidoune_plagne, torus_upper,
    BoundsMethod, BoundsReport,
};
pub use cyclic::{iterated_noisy, noisy_sum, CyclicSet, Subgroup, MAX_MODULUS};
pub use equivalence::{apply_transform, are_equivalent, canonicalize, size3_orbit, CanonicalForm};
pub use error::{Error, Result};
pub use sumfree::{
    brute_force_mu, build_0s_witness, is_redundant, is_sumfree, longest_interval, search_mu,
    IntervalWitness, SearchOptions, SearchResult, SumFreeParams,
};
