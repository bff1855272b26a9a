//! Exhaustive census of contracted 4-colored graphs with boundary.
//!
//! Every such graph has a color `c` whose `ĉ`-residues are all singular. Up to
//! renaming colors that color is 3, so the census starts from 3-colored graphs
//! whose components all cap to surfaces of positive genus, adds the 3-edges
//! in every admissible way and keeps one canonical code per isomorphism class.

use std::collections::BTreeSet;
use std::sync::atomic::AtomicBool;
use std::sync::Arc;

use rayon::prelude::*;

use gem_core::{is_rigid, GemCode, GemError};

mod extend;
mod filter;
mod partition;
mod record;
mod surfaces;

pub use filter::{BoundaryClass, CensusFilter, Parity};
pub use partition::{generate_two_colored, CyclePartition};
pub use record::{BoundarySurface, CatalogRecord, Homology};
pub use surfaces::{build_surface_set, Adjacency3, SurfaceGraph, SurfaceGraphSet};

use surfaces::{build_base_set, BaseKind};

/// Largest supported order.
pub const MAX_ORDER: usize = 16;

/// Environment variable bounding the number of worker threads.
pub const THREADS_ENV: &str = "GEM_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error("order must be even and between 2 and {MAX_ORDER}, got {0}")]
    InvalidOrder(usize),
    #[error("invalid filter: {0}")]
    InvalidFilter(String),
    #[error("enumeration cancelled")]
    Cancelled,
    #[error("record {code}: stored {fields} differ from recomputation")]
    RecordMismatch { code: String, fields: String },
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Code(#[from] GemError),
}

/// Worker count and cancellation for an enumeration.
#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// `None` uses rayon's default.
    pub threads: Option<usize>,
    /// Setting the flag stops the run with [`CensusError::Cancelled`].
    pub cancel: Option<Arc<AtomicBool>>,
}

impl EnumerateOptions {
    /// Reads the thread count from `GEM_THREADS`; unset, empty or invalid means default.
    pub fn from_env() -> Self {
        let threads = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&t| t > 0);
        EnumerateOptions { threads, cancel: None }
    }
}

/// Records of every class passing `filter`, sorted by code.
pub fn enumerate(order: usize, filter: &CensusFilter) -> Result<Vec<CatalogRecord>, CensusError> {
    enumerate_with(order, filter, &EnumerateOptions::from_env())
}

pub fn enumerate_with(
    order: usize,
    filter: &CensusFilter,
    options: &EnumerateOptions,
) -> Result<Vec<CatalogRecord>, CensusError> {
    let codes = enumerate_codes(order, filter, options)?;
    run_in_pool(options, || Ok(codes.par_iter().map(CatalogRecord::from_code).collect()))
}

/// Canonical codes of every class passing `filter`, sorted.
pub fn enumerate_codes(
    order: usize,
    filter: &CensusFilter,
    options: &EnumerateOptions,
) -> Result<Vec<GemCode>, CensusError> {
    filter.validate()?;
    if order < 2 || order % 2 != 0 || order > MAX_ORDER {
        return Err(CensusError::InvalidOrder(order));
    }
    let kind = BaseKind {
        orientable_only: filter.parity == Parity::Bipartite,
        torus_only: filter.boundary != BoundaryClass::Any,
        connected_only: filter.boundary == BoundaryClass::ToricConnected,
    };
    let bases = build_base_set(order, kind).members;
    let mut tasks = Vec::new();
    for (i, base) in bases.iter().enumerate() {
        if filter.parity == Parity::Bipartite {
            // the first component keeps its sides
            let k = base.component_labels().1;
            tasks.extend((0..1u64 << (k - 1)).map(|m| (i, m << 1)));
        } else {
            tasks.push((i, 0));
        }
    }
    let never = AtomicBool::new(false);
    let cancel = options.cancel.as_deref().unwrap_or(&never);
    run_in_pool(options, || {
        let found = tasks
            .par_iter()
            .map(|&(i, flips)| extend::extend_base(&bases[i], filter, flips, cancel))
            .try_reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                Ok(a)
            })?;
        let codes: Vec<GemCode> = found
            .into_par_iter()
            .map(|text| GemCode::parse(&text).expect("canonical codes are valid"))
            .filter(|code| !filter.rigid_only || is_rigid(&code.decode()).expect("bipartite"))
            .collect();
        if cancel.load(std::sync::atomic::Ordering::Relaxed) {
            return Err(CensusError::Cancelled);
        }
        Ok(codes)
    })
}

/// Number of classes passing `filter`.
pub fn count(order: usize, filter: &CensusFilter) -> Result<usize, CensusError> {
    Ok(enumerate_codes(order, filter, &EnumerateOptions::from_env())?.len())
}

fn run_in_pool<T: Send>(
    options: &EnumerateOptions,
    job: impl FnOnce() -> Result<T, CensusError> + Send,
) -> Result<T, CensusError> {
    match options.threads {
        None => job(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CensusError::ThreadPool(e.to_string()))?
            .install(job),
    }
}
