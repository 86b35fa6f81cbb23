//! Enumeration spread over a thread pool.

use std::collections::BTreeSet;

use rayon::prelude::*;
use sfa_core::enumerate::{enumerate_shard, Catalog, EnumerationQuery};
use sfa_core::{pair_catalog, CodeKind, Error};

/// Enumerates with `jobs` worker threads (0 picks one per core), then pairs SC
/// entries with their reverses. The result does not depend on `jobs`.
pub fn enumerate_parallel(query: &EnumerationQuery, jobs: usize) -> Result<Catalog, Error> {
    query.chord_count()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let shards = 4 * pool.current_num_threads();
    let parts: Vec<BTreeSet<_>> = pool.install(|| {
        (0..shards)
            .into_par_iter()
            .map(|s| enumerate_shard(query, s, shards))
            .collect::<Result<_, _>>()
    })?;
    let codes: BTreeSet<_> = parts.into_iter().flatten().collect();
    let mut catalog = Catalog::from_codes(*query, codes);
    if query.kind == CodeKind::Sc {
        pair_catalog(&mut catalog)?;
    }
    Ok(catalog)
}
