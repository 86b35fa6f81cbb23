//! Ribbon complexes and the closed surface a diagram encodes.
//!
//! The base disc is the neighbourhood of the source, its boundary the unit
//! circle read counterclockwise. Each chord is a band glued to the base disc at
//! its two ends, twisted when the chord is `Cross`. A T-diagram adds a central
//! disc, oriented clockwise, joined to the circle by the lower and side bands.
//! Capping every boundary cycle with a disc gives the closed surface.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{ChordDiagram, Diagram, Site, SurfaceClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiscOrientation {
    Counterclockwise,
    Clockwise,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BandRole {
    Chord(u32),
    Lower,
    SideA,
    SideB,
}

/// Where a band end is glued: slot `slot` of disc `disc`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Attachment {
    pub disc: usize,
    pub slot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Band {
    pub role: BandRole,
    pub ends: [Attachment; 2],
    pub twisted: bool,
}

/// A disc with its slots listed in the disc's positive direction. Each slot
/// holds `(band, end)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disc {
    pub orientation: DiscOrientation,
    pub slots: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonComplex {
    discs: Vec<Disc>,
    bands: Vec<Band>,
}

/// The two corners a band end occupies on a disc boundary. `Before` is reached
/// by moving along the boundary in the positive direction, `After` is where the
/// next positive arc starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    Before,
    After,
}

impl Corner {
    pub fn opposite(self) -> Self {
        match self {
            Corner::Before => Corner::After,
            Corner::After => Corner::Before,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Segment {
    /// Boundary arc `arc` of `disc`, running from slot `arc` to slot `arc + 1`
    /// in the positive direction; `forward` tells how the cycle traverses it.
    Arc { disc: usize, arc: usize, forward: bool },
    /// The whole boundary of a disc without slots.
    Rim { disc: usize },
    /// A side of `band`, named by the corner it touches at end 0. The cycle
    /// enters it at end `from_end`, arriving from that end's `arrival` corner.
    BandSide {
        band: usize,
        side: Corner,
        from_end: usize,
        arrival: Corner,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCycle {
    pub segments: Vec<Segment>,
}

impl RibbonComplex {
    /// Checks that every slot holds exactly the band end that points at it.
    pub fn new(discs: Vec<Disc>, bands: Vec<Band>) -> Option<Self> {
        let slot_total: usize = discs.iter().map(|d| d.slots.len()).sum();
        if slot_total != 2 * bands.len() {
            return None;
        }
        for (b, band) in bands.iter().enumerate() {
            for (e, at) in band.ends.iter().enumerate() {
                if discs.get(at.disc)?.slots.get(at.slot)? != &(b, e) {
                    return None;
                }
            }
        }
        Some(RibbonComplex { discs, bands })
    }

    /// Reverses the positive direction of `disc`, keeping slot 0 in place.
    pub fn flip_disc(&mut self, disc: usize) {
        let d = &mut self.discs[disc];
        d.orientation = match d.orientation {
            DiscOrientation::Counterclockwise => DiscOrientation::Clockwise,
            DiscOrientation::Clockwise => DiscOrientation::Counterclockwise,
        };
        d.slots[1..].reverse();
        for (slot, &(band, end)) in d.slots.iter().enumerate() {
            self.bands[band].ends[end] = Attachment { disc, slot };
        }
    }

    pub fn discs(&self) -> &[Disc] {
        &self.discs
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    /// Twist relative to the discs' positive directions: a flat band between
    /// discs of opposite orientation behaves like a twisted one.
    pub fn effective_twist(&self, band: usize) -> bool {
        let b = &self.bands[band];
        let o0 = self.discs[b.ends[0].disc].orientation;
        let o1 = self.discs[b.ends[1].disc].orientation;
        b.twisted ^ (o0 != o1)
    }

    /// All boundary cycles, starting each at the first arc not yet used.
    pub fn boundary_cycles(&self) -> Vec<BoundaryCycle> {
        let mut used: Vec<Vec<bool>> = self.discs.iter().map(|d| vec![false; d.slots.len()]).collect();
        let mut cycles = Vec::new();
        for disc in 0..self.discs.len() {
            if self.discs[disc].slots.is_empty() {
                cycles.push(BoundaryCycle {
                    segments: vec![Segment::Rim { disc }],
                });
                continue;
            }
            for arc in 0..self.discs[disc].slots.len() {
                if !used[disc][arc] {
                    cycles.push(self.walk(disc, arc, &mut used));
                }
            }
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.boundary_cycles().len()
    }

    fn walk(&self, disc0: usize, slot0: usize, used: &mut [Vec<bool>]) -> BoundaryCycle {
        let mut segments = Vec::new();
        // Leaving slot `slot` of `disc`, forward along arc `slot` or backward
        // along arc `slot - 1`.
        let (mut disc, mut slot, mut forward) = (disc0, slot0, true);
        loop {
            let k = self.discs[disc].slots.len();
            let (arc, next, arrival) = if forward {
                (slot, (slot + 1) % k, Corner::Before)
            } else {
                let prev = (slot + k - 1) % k;
                (prev, prev, Corner::After)
            };
            used[disc][arc] = true;
            segments.push(Segment::Arc { disc, arc, forward });

            let (band, from_end) = self.discs[disc].slots[next];
            let twist = self.effective_twist(band);
            let exit = if twist { arrival } else { arrival.opposite() };
            let side = if from_end == 0 { arrival } else { exit };
            segments.push(Segment::BandSide {
                band,
                side,
                from_end,
                arrival,
            });

            let to = self.bands[band].ends[1 - from_end];
            disc = to.disc;
            slot = to.slot;
            forward = exit == Corner::After;
            if (disc, slot, forward) == (disc0, slot0, true) {
                break;
            }
        }
        BoundaryCycle { segments }
    }

    /// Euler characteristic, orientability and genus of the capped surface.
    pub fn surface_class(&self) -> SurfaceClass {
        let chi = self.discs.len() as i64 - self.bands.len() as i64 + self.cycle_count() as i64;
        let orientable = self.is_orientable();
        SurfaceClass::from_euler(orientable, chi).expect("ribbon complex yields a closed surface")
    }

    /// Two-colours the discs so that flat bands join equal colours and twisted
    /// bands unequal ones; a conflict means a Möbius band.
    pub fn is_orientable(&self) -> bool {
        let mut bit: Vec<Option<bool>> = vec![None; self.discs.len()];
        if bit.is_empty() {
            return true;
        }
        bit[0] = Some(false);
        let mut changed = true;
        while changed {
            changed = false;
            for b in 0..self.bands.len() {
                let [e0, e1] = self.bands[b].ends;
                let t = self.effective_twist(b);
                match (bit[e0.disc], bit[e1.disc]) {
                    (Some(x), Some(y)) => {
                        if (x ^ t) != y {
                            return false;
                        }
                    }
                    (Some(x), None) => {
                        bit[e1.disc] = Some(x ^ t);
                        changed = true;
                    }
                    (None, Some(y)) => {
                        bit[e0.disc] = Some(y ^ t);
                        changed = true;
                    }
                    (None, None) => {}
                }
            }
        }
        true
    }
}

/// Base disc with one slot per chord or T end, in circle order; for T-diagrams
/// a clockwise central disc with slots (lower, sideA, sideB).
pub fn to_ribbon(d: &Diagram) -> RibbonComplex {
    let arr = d.arrangement();
    let slot_sites: Vec<Site> = arr.sites().iter().copied().filter(|s| !s.is_arc()).collect();
    let n = arr.chord_count();
    let has_t = arr.has_t();
    let band_count = n + if has_t { 3 } else { 0 };
    let mut bands: Vec<Option<Band>> = vec![None; band_count];
    let mut base_slots = Vec::with_capacity(slot_sites.len());

    let t_band = |s: Site| match s {
        Site::TLower => n,
        Site::TSideA => n + 1,
        _ => n + 2,
    };
    for (slot, &s) in slot_sites.iter().enumerate() {
        let band = match s {
            Site::Chord(c) => c as usize,
            other => t_band(other),
        };
        let at = Attachment { disc: 0, slot };
        match &mut bands[band] {
            Some(b) => {
                b.ends[1] = at;
                base_slots.push((band, 1));
            }
            slot_band @ None => {
                let (role, twisted) = match (s, d) {
                    (Site::Chord(c), _) => (BandRole::Chord(c), d.chord_color(c).is_cross()),
                    (Site::TLower, Diagram::Sc(t)) => (BandRole::Lower, t.edges().lower.is_cross()),
                    (Site::TSideA, Diagram::Sc(t)) => (BandRole::SideA, t.edges().side_a.is_cross()),
                    (Site::TSideB, Diagram::Sc(t)) => (BandRole::SideB, t.edges().side_b.is_cross()),
                    _ => unreachable!("T token outside a T-diagram"),
                };
                *slot_band = Some(Band {
                    role,
                    ends: [at, at],
                    twisted,
                });
                base_slots.push((band, 0));
            }
        }
    }
    let mut discs = vec![Disc {
        orientation: DiscOrientation::Counterclockwise,
        slots: base_slots,
    }];
    if has_t {
        let mut central = Vec::with_capacity(3);
        for (slot, band) in [n, n + 1, n + 2].into_iter().enumerate() {
            bands[band].as_mut().unwrap().ends[1] = Attachment { disc: 1, slot };
            central.push((band, 1));
        }
        discs.push(Disc {
            orientation: DiscOrientation::Clockwise,
            slots: central,
        });
    }
    let bands = bands.into_iter().map(Option::unwrap).collect();
    RibbonComplex { discs, bands }
}

pub fn boundary_cycles(rc: &RibbonComplex) -> Vec<BoundaryCycle> {
    rc.boundary_cycles()
}

pub fn surface_class(rc: &RibbonComplex) -> SurfaceClass {
    rc.surface_class()
}

/// Counts chord cycles by walking the circle directly: move along an arc to the
/// next chord end, cross the chord, and keep going in the same direction after
/// a plain chord or turn around after a cross one.
pub fn chord_cycles(d: &ChordDiagram) -> usize {
    let arr = d.arrangement();
    let m = arr.len();
    if m == 0 {
        return 1;
    }
    // Gap g lies between chord ends g and g+1.
    let mut seen = vec![false; m];
    let mut cycles = 0;
    for start in 0..m {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let (mut gap, mut ccw) = (start, true);
        loop {
            seen[gap] = true;
            let end = if ccw { (gap + 1) % m } else { gap };
            let partner = arr.partner(end).unwrap();
            let c = arr.sites()[end].chord().unwrap();
            if d.color(c).is_cross() {
                ccw = !ccw;
            }
            gap = if ccw { partner } else { (partner + m - 1) % m };
            if gap == start && ccw {
                break;
            }
        }
    }
    cycles
}

/// Number of boundary cycles an optimal flow of this kind needs: one, except
/// for SC flows on the projective plane, where the source has two sinks.
pub fn target_cycles(kind: crate::code::CodeKind, surface: SurfaceClass) -> usize {
    if kind == crate::code::CodeKind::Sc && surface == SurfaceClass::nonorientable(1) {
        2
    } else {
        1
    }
}

pub fn is_optimal_shape(d: &Diagram) -> bool {
    let rc = to_ribbon(d);
    let cycles = rc.cycle_count();
    if cycles > 2 {
        return false;
    }
    cycles == target_cycles(d.kind(), rc.surface_class())
}
