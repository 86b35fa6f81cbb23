//! Listings that back up a catalog count when it disagrees with a reference.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use sfa_core::enumerate::{reference_count, Catalog};
use sfa_core::surface::to_ribbon;
use sfa_core::{Diagram, DiagramCode};

/// `Some((computed, reference))` when a reference count exists and differs.
pub fn count_mismatch(catalog: &Catalog) -> Option<(usize, usize)> {
    let expected = reference_count(&catalog.query)?;
    (expected != catalog.len()).then_some((catalog.len(), expected))
}

/// Every entry with its surface and cycle count, grouped by underlying chord
/// diagram for SN catalogs.
pub fn audit_listing(catalog: &Catalog) -> String {
    let mut groups: BTreeMap<String, Vec<&DiagramCode>> = BTreeMap::new();
    for code in catalog.codes() {
        let key = match code.to_diagram() {
            Diagram::Sn(c) => Diagram::Base(c.chord_diagram()).canonical_code().to_string(),
            _ => String::new(),
        };
        groups.entry(key).or_default().push(code);
    }
    let mut out = String::new();
    let q = &catalog.query;
    let _ = writeln!(
        out,
        "audit: {} {} ({} entries)",
        q.kind.as_str(),
        q.surface,
        catalog.len()
    );
    for (base, codes) in &groups {
        if !base.is_empty() {
            let _ = writeln!(out, "chord diagram {base}: {} placements", codes.len());
        }
        for code in codes {
            let d = code.to_diagram();
            let rc = to_ribbon(&d);
            let _ = writeln!(
                out,
                "  {:<24} {}  cycles={}  reflected={}",
                code.to_string(),
                rc.surface_class(),
                rc.cycle_count(),
                sfa_core::emit_code(&d.reflect(), sfa_core::Direction::Counterclockwise),
            );
        }
    }
    out
}
