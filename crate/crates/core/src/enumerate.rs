//! Exhaustive enumeration of diagrams for a closed surface.
//!
//! Every chord pairing, colouring and placement of the marked sites is built,
//! filtered by boundary cycle count and surface class, and deduplicated by
//! canonical code. Work splits into shards by pairing index so callers can run
//! shards in parallel and merge the resulting sets.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{CodeKind, DiagramCode};
use crate::diagram::{CDiagram, ChordColor, ChordDiagram, Diagram, EdgeColors, Polarity, Site, SurfaceClass, TDiagram};
use crate::error::Error;
use crate::surface::{target_cycles, to_ribbon};

/// Number of optimal SC-flows on the sphere. They need several source circles
/// and have no single T-diagram, so they are counted but not enumerated.
pub const SPHERE_SC_FLOW_COUNT: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnumerationQuery {
    pub kind: CodeKind,
    pub surface: SurfaceClass,
}

impl EnumerationQuery {
    pub fn new(kind: CodeKind, orientable: bool, genus: u32) -> Result<Self, Error> {
        Ok(EnumerationQuery {
            kind,
            surface: SurfaceClass::new(orientable, genus)?,
        })
    }

    /// Boundary cycles a diagram must have to be listed.
    pub fn target_cycles(&self) -> usize {
        target_cycles(self.kind, self.surface)
    }

    /// Chords per diagram, from χ = discs − bands + cycles.
    pub fn chord_count(&self) -> Result<usize, Error> {
        let chi = self.surface.euler_characteristic();
        let n = match self.kind {
            CodeKind::Base | CodeKind::Sn => 2 - chi,
            CodeKind::Sc => {
                if self.surface == SurfaceClass::orientable(0) {
                    return Err(Error::SphereUnsupported);
                }
                self.target_cycles() as i64 - 1 - chi
            }
        };
        if n < 0 {
            return Err(Error::UnreachableSurface);
        }
        Ok(n as usize)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub code: DiagramCode,
    pub surface: SurfaceClass,
    pub chord_count: usize,
    /// Set for SN entries, which are listed with a source saddle-node.
    pub polarity: Option<Polarity>,
    pub self_reverse: bool,
    pub reverse_partner: Option<DiagramCode>,
}

impl CatalogEntry {
    pub fn kind(&self) -> CodeKind {
        self.code.kind()
    }
}

/// Entries sorted by code text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub query: EnumerationQuery,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn from_codes(query: EnumerationQuery, codes: impl IntoIterator<Item = DiagramCode>) -> Self {
        let polarity = (query.kind == CodeKind::Sn).then_some(Polarity::Source);
        let mut entries: Vec<CatalogEntry> = codes
            .into_iter()
            .map(|code| CatalogEntry {
                chord_count: code.chord_count(),
                code,
                surface: query.surface,
                polarity,
                self_reverse: false,
                reverse_partner: None,
            })
            .collect();
        sort_entries(&mut entries);
        Catalog { query, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn codes(&self) -> impl Iterator<Item = &DiagramCode> {
        self.entries.iter().map(|e| &e.code)
    }

    /// Optimal flows the catalog stands for. Each projective-plane SC diagram
    /// also gives a reverse flow with two sources and no T-diagram.
    pub fn flow_count(&self) -> usize {
        if self.query.kind == CodeKind::Sc && self.query.surface == SurfaceClass::nonorientable(1) {
            2 * self.len()
        } else {
            self.len()
        }
    }
}

pub fn sort_entries(entries: &mut [CatalogEntry]) {
    entries.sort_by_cached_key(|e| e.code.to_string());
}

/// Every way to pair 2n points on a circle, as site sequences with chords
/// numbered by first occurrence.
pub fn pairings(n: usize) -> Vec<Vec<u32>> {
    fn fill(seq: &mut Vec<Option<u32>>, next: u32, out: &mut Vec<Vec<u32>>) {
        let Some(first) = seq.iter().position(Option::is_none) else {
            out.push(seq.iter().map(|s| s.unwrap()).collect());
            return;
        };
        seq[first] = Some(next);
        for j in first + 1..seq.len() {
            if seq[j].is_none() {
                seq[j] = Some(next);
                fill(seq, next + 1, out);
                seq[j] = None;
            }
        }
        seq[first] = None;
    }
    let mut out = Vec::new();
    fill(&mut vec![None; 2 * n], 0, &mut out);
    out
}

fn colorings(n: usize, plain_only: bool) -> Vec<Vec<ChordColor>> {
    if plain_only {
        return vec![vec![ChordColor::Plain; n]];
    }
    (0u32..1 << n)
        .map(|mask| (0..n).map(|i| ChordColor::from_cross(mask >> i & 1 == 1)).collect())
        .collect()
}

fn accepts(query: &EnumerationQuery, d: &Diagram) -> bool {
    let rc = to_ribbon(d);
    rc.cycle_count() == query.target_cycles() && rc.surface_class() == query.surface
}

/// Canonical codes found among the pairings with index ≡ `shard` (mod `shards`).
pub fn enumerate_shard(query: &EnumerationQuery, shard: usize, shards: usize) -> Result<BTreeSet<DiagramCode>, Error> {
    let n = query.chord_count()?;
    let shards = shards.max(1);
    let plain_only = query.surface.is_orientable() && query.kind != CodeKind::Sc;
    let colors = colorings(n, plain_only);
    let mut found = BTreeSet::new();
    for (index, pairing) in pairings(n).into_iter().enumerate() {
        if index % shards != shard {
            continue;
        }
        let chords: Vec<Site> = pairing.iter().map(|&c| Site::Chord(c)).collect();
        match query.kind {
            CodeKind::Base => {
                for cc in &colors {
                    let d = Diagram::Base(ChordDiagram::from_parts(chords.clone(), cc.clone()));
                    if accepts(query, &d) {
                        found.insert(d.canonical_code());
                    }
                }
            }
            CodeKind::Sn => {
                let m = 2 * n + 2;
                for cc in &colors {
                    let base = Diagram::Base(ChordDiagram::from_parts(chords.clone(), cc.clone()));
                    if !accepts(query, &base) {
                        continue;
                    }
                    for end in 1..m {
                        let sites = place(m, &[(0, Site::ArcStart), (end, Site::ArcEnd)], &chords);
                        let d = Diagram::Sn(CDiagram::from_parts(sites, cc.clone(), Polarity::Source));
                        found.insert(d.canonical_code());
                    }
                }
            }
            CodeKind::Sc => {
                let m = 2 * n + 3;
                for a in 1..m {
                    for b in 1..m {
                        if a == b {
                            continue;
                        }
                        let sites = place(m, &[(0, Site::TLower), (a, Site::TSideA), (b, Site::TSideB)], &chords);
                        for cc in &colors {
                            for mask in 0u8..8 {
                                let edges = EdgeColors::new(
                                    ChordColor::from_cross(mask & 1 != 0),
                                    ChordColor::from_cross(mask & 2 != 0),
                                    ChordColor::from_cross(mask & 4 != 0),
                                );
                                let d = Diagram::Sc(TDiagram::from_parts(sites.clone(), cc.clone(), edges));
                                if accepts(query, &d) {
                                    found.insert(d.canonical_code());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(found)
}

/// Puts the `fixed` sites at their positions and the chord ends, in order, in
/// the remaining ones.
fn place(m: usize, fixed: &[(usize, Site)], chords: &[Site]) -> Vec<Site> {
    let mut rest = chords.iter().copied();
    (0..m)
        .map(|i| match fixed.iter().find(|(p, _)| *p == i) {
            Some(&(_, s)) => s,
            None => rest.next().unwrap(),
        })
        .collect()
}

pub fn enumerate(query: &EnumerationQuery) -> Result<Catalog, Error> {
    let codes = enumerate_shard(query, 0, 1)?;
    Ok(Catalog::from_codes(*query, codes))
}

pub fn enumerate_base(orientable: bool, genus: u32) -> Result<Catalog, Error> {
    enumerate(&EnumerationQuery::new(CodeKind::Base, orientable, genus)?)
}

pub fn enumerate_sn(orientable: bool, genus: u32) -> Result<Catalog, Error> {
    enumerate(&EnumerationQuery::new(CodeKind::Sn, orientable, genus)?)
}

pub fn enumerate_sc(orientable: bool, genus: u32) -> Result<Catalog, Error> {
    enumerate(&EnumerationQuery::new(CodeKind::Sc, orientable, genus)?)
}

/// Reference diagram counts for small surfaces, as
/// `(kind, orientable, genus, count)`.
pub const REFERENCE_COUNTS: &[(CodeKind, bool, u32, usize)] = &[
    (CodeKind::Base, true, 1, 1),
    (CodeKind::Base, true, 2, 4),
    (CodeKind::Base, false, 1, 1),
    (CodeKind::Base, false, 2, 2),
    (CodeKind::Base, false, 3, 8),
    (CodeKind::Sn, true, 0, 1),
    (CodeKind::Sn, true, 1, 5),
    (CodeKind::Sn, true, 2, 81),
    (CodeKind::Sn, false, 1, 3),
    (CodeKind::Sn, false, 2, 13),
    (CodeKind::Sn, false, 3, 123),
    (CodeKind::Sc, true, 1, 1),
    (CodeKind::Sc, true, 2, 12),
    (CodeKind::Sc, false, 1, 2),
    (CodeKind::Sc, false, 2, 2),
    (CodeKind::Sc, false, 3, 20),
];

pub fn reference_count(query: &EnumerationQuery) -> Option<usize> {
    REFERENCE_COUNTS
        .iter()
        .find(|&&(k, o, g, _)| k == query.kind && o == query.surface.is_orientable() && g == query.surface.genus())
        .map(|&(_, _, _, c)| c)
}
