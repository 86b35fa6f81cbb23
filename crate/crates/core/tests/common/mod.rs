#![allow(dead_code)]

use proptest::prelude::*;
use sfa_core::surface::{Corner, RibbonComplex};
use sfa_core::{CDiagram, ChordColor, ChordDiagram, Diagram, EdgeColors, Polarity, Site, TDiagram};

pub fn chord_ids(seq: &[u32]) -> Vec<Site> {
    seq.iter().map(|&c| Site::Chord(c)).collect()
}

pub fn colors(n: usize, mask: u32) -> Vec<(u32, ChordColor)> {
    (0..n as u32)
        .map(|c| (c, ChordColor::from_cross(mask >> c & 1 == 1)))
        .collect()
}

pub fn edges(mask: u32) -> EdgeColors {
    EdgeColors::new(
        ChordColor::from_cross(mask & 1 != 0),
        ChordColor::from_cross(mask & 2 != 0),
        ChordColor::from_cross(mask & 4 != 0),
    )
}

/// Inserts `extra` sites so that they land at the given final positions.
pub fn insert(chords: &[Site], extra: &[(usize, Site)]) -> Vec<Site> {
    let m = chords.len() + extra.len();
    let mut rest = chords.iter().copied();
    (0..m)
        .map(|i| match extra.iter().find(|(p, _)| *p == i) {
            Some(&(_, s)) => s,
            None => rest.next().unwrap(),
        })
        .collect()
}

pub fn base(seq: &[u32], mask: u32) -> Diagram {
    Diagram::Base(ChordDiagram::new(&chord_ids(seq), colors(seq.len() / 2, mask)).unwrap())
}

pub fn sn(seq: &[u32], mask: u32, start: usize, end: usize) -> Diagram {
    let sites = insert(&chord_ids(seq), &[(start, Site::ArcStart), (end, Site::ArcEnd)]);
    Diagram::Sn(CDiagram::new(&sites, colors(seq.len() / 2, mask), Polarity::Source).unwrap())
}

pub fn sc(seq: &[u32], mask: u32, pos: [usize; 3], edge_mask: u32) -> Diagram {
    let sites = insert(
        &chord_ids(seq),
        &[(pos[0], Site::TLower), (pos[1], Site::TSideA), (pos[2], Site::TSideB)],
    );
    Diagram::Sc(TDiagram::new(&sites, colors(seq.len() / 2, mask), edges(edge_mask)).unwrap())
}

/// All pairings of 2n points with chords labelled by first occurrence.
pub fn pairings(n: usize) -> Vec<Vec<u32>> {
    sfa_core::enumerate::pairings(n)
}

/// Random pairing of 2n points, labels shuffled.
pub fn pairing_strategy(max_n: usize) -> impl Strategy<Value = Vec<u32>> {
    (0..=max_n).prop_flat_map(|n| {
        let ids: Vec<u32> = (0..n as u32).flat_map(|c| [c, c]).collect();
        Just(ids).prop_shuffle()
    })
}

fn distinct(m: usize, k: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::sample::subsequence((0..m).collect::<Vec<_>>(), k).prop_shuffle()
}

pub fn sn_strategy(max_n: usize) -> impl Strategy<Value = Diagram> {
    pairing_strategy(max_n).prop_flat_map(|seq| {
        let m = seq.len() + 2;
        (Just(seq), any::<u32>(), distinct(m, 2)).prop_map(|(seq, mask, p)| sn(&seq, mask, p[0], p[1]))
    })
}

pub fn sc_strategy(max_n: usize) -> impl Strategy<Value = Diagram> {
    pairing_strategy(max_n).prop_flat_map(|seq| {
        let m = seq.len() + 3;
        (Just(seq), any::<u32>(), distinct(m, 3), 0u32..8)
            .prop_map(|(seq, mask, p, e)| sc(&seq, mask, [p[0], p[1], p[2]], e))
    })
}

pub fn base_strategy(max_n: usize) -> impl Strategy<Value = Diagram> {
    (pairing_strategy(max_n), any::<u32>()).prop_map(|(seq, mask)| base(&seq, mask))
}

pub fn any_diagram(max_n: usize) -> impl Strategy<Value = Diagram> {
    prop_oneof![base_strategy(max_n), sn_strategy(max_n), sc_strategy(max_n)]
}

/// Boundary components as orbits of two involutions on corner points: one
/// joins the two corners bounding a disc arc, the other the two ends of a band
/// side. Counted with union-find, no walking.
pub fn corner_orbits(rc: &RibbonComplex) -> usize {
    let mut offset = Vec::new();
    let mut total = 0;
    for d in rc.discs() {
        offset.push(total);
        total += 2 * d.slots.len();
    }
    let corner = |disc: usize, slot: usize, c: Corner| offset[disc] + 2 * slot + (c == Corner::After) as usize;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    };
    for (di, d) in rc.discs().iter().enumerate() {
        let k = d.slots.len();
        for s in 0..k {
            union(
                &mut parent,
                corner(di, s, Corner::After),
                corner(di, (s + 1) % k, Corner::Before),
            );
        }
    }
    for (bi, b) in rc.bands().iter().enumerate() {
        let [e0, e1] = b.ends;
        for c in [Corner::Before, Corner::After] {
            let far = if rc.effective_twist(bi) { c } else { c.opposite() };
            union(&mut parent, corner(e0.disc, e0.slot, c), corner(e1.disc, e1.slot, far));
        }
    }
    let rims = rc.discs().iter().filter(|d| d.slots.is_empty()).count();
    (0..total).filter(|&x| find(&mut parent, x) == x).count() + rims
}
