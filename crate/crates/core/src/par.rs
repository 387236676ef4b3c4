//! Batch entry points that fan independent work items across threads when
//! the `parallel` feature is enabled.  Each has a sequential twin with the
//! `_seq` suffix that is always compiled: it is the fallback when the
//! feature is off and the baseline in the benchmark suite.  Outputs are
//! identical in content and order either way.

use crate::error::Result;
use crate::fflv::{fflv_points, Violator};
use crate::groebner::straighten;
use crate::module_oracle::{annihilates_hw, ExplicitModule};
use crate::roots::{DominantWeight, RootSystem};
use crate::uea::{Algebra, ProductKind, UEAElement};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Straightens every violator in the batch, preserving input order.
pub fn straighten_violators(
    alg: &Algebra,
    lambda: &DominantWeight,
    violators: &[Violator],
    kind: ProductKind,
) -> Result<Vec<UEAElement>> {
    #[cfg(feature = "parallel")]
    {
        violators
            .par_iter()
            .map(|v| straighten(alg, lambda, v, kind))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        straighten_violators_seq(alg, lambda, violators, kind)
    }
}

/// Sequential twin of [`straighten_violators`].
pub fn straighten_violators_seq(
    alg: &Algebra,
    lambda: &DominantWeight,
    violators: &[Violator],
    kind: ProductKind,
) -> Result<Vec<UEAElement>> {
    violators
        .iter()
        .map(|v| straighten(alg, lambda, v, kind))
        .collect()
}

/// Enumerates lattice points for every weight in the batch, preserving
/// input order.
pub fn points_for_weights(rs: &RootSystem, weights: &[DominantWeight]) -> Vec<Vec<Vec<u32>>> {
    #[cfg(feature = "parallel")]
    {
        weights.par_iter().map(|w| fflv_points(rs, w)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        points_for_weights_seq(rs, weights)
    }
}

/// Sequential twin of [`points_for_weights`].
pub fn points_for_weights_seq(rs: &RootSystem, weights: &[DominantWeight]) -> Vec<Vec<Vec<u32>>> {
    weights.iter().map(|w| fflv_points(rs, w)).collect()
}

/// Whether every element in the batch annihilates the highest vector.
pub fn annihilates_all(module: &ExplicitModule, alg: &Algebra, elements: &[&UEAElement]) -> bool {
    #[cfg(feature = "parallel")]
    {
        elements.par_iter().all(|x| annihilates_hw(module, alg, x))
    }
    #[cfg(not(feature = "parallel"))]
    {
        annihilates_all_seq(module, alg, elements)
    }
}

/// Sequential twin of [`annihilates_all`].
pub fn annihilates_all_seq(
    module: &ExplicitModule,
    alg: &Algebra,
    elements: &[&UEAElement],
) -> bool {
    elements.iter().all(|x| annihilates_hw(module, alg, x))
}
