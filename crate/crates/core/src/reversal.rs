//! Diagrams of reverse flows.
//!
//! Reversing an SN-flow only turns the saddle-node from a source into a sink.
//! Reversing an SC-flow swaps the roles of source and sink: the single boundary
//! cycle of the T-diagram's ribbon complex becomes the new circle, the sides of
//! each chord band become the ends of a new chord, the sides of the lower band
//! become the new side ends and the lower edge, continued through the central
//! disc, gives the new lower end.

use alloc::vec::Vec;

use crate::code::{CodeKind, DiagramCode};
use crate::diagram::{CDiagram, ChordColor, Diagram, EdgeColors, Site, SurfaceClass, TDiagram};
use crate::enumerate::Catalog;
use crate::error::Error;
use crate::surface::{to_ribbon, BandRole, Corner, Segment};

pub fn reverse_c(d: &CDiagram) -> CDiagram {
    d.with_polarity(d.polarity().toggled())
}

/// A site of the new circle, in the order the boundary cycle meets it.
#[derive(Clone, Copy, Debug)]
enum NewSite {
    Lower { sign: i8 },
    Chord { chord: u32, sign: i8 },
    Side { corner: Corner, sign: i8 },
}

fn sign(b: bool) -> i8 {
    if b {
        -1
    } else {
        1
    }
}

pub fn reverse_t(d: &TDiagram) -> Result<TDiagram, Error> {
    let mut rc = to_ribbon(&Diagram::Sc(d.clone()));
    // Central slots become (lower, sideB, sideA) with a counterclockwise
    // frame, so the arc between the side slots is arc 1.
    rc.flip_disc(1);
    let mut cycles = rc.boundary_cycles();
    if cycles.len() != 1 {
        return Err(Error::NotOneCycled);
    }
    let cycle = cycles.pop().unwrap();

    let mut sites = Vec::new();
    for seg in &cycle.segments {
        match *seg {
            Segment::Arc {
                disc: 1,
                arc: 1,
                forward,
            } => sites.push(NewSite::Lower { sign: sign(!forward) }),
            Segment::BandSide {
                band,
                side,
                from_end,
                arrival,
            } => {
                let twist = rc.effective_twist(band);
                // Direction of the cycle across the band, against the band's
                // frame carried over from end 0.
                let entered = sign(arrival == Corner::After);
                let rel = if from_end == 0 {
                    -entered
                } else {
                    -entered * sign(twist)
                };
                match rc.bands()[band].role {
                    BandRole::Chord(chord) => sites.push(NewSite::Chord { chord, sign: rel }),
                    BandRole::Lower => {
                        // Seen from the central end of the band.
                        let corner = if twist { side } else { side.opposite() };
                        sites.push(NewSite::Side {
                            corner,
                            sign: rel * sign(twist),
                        });
                    }
                    BandRole::SideA | BandRole::SideB => {}
                }
            }
            _ => {}
        }
    }

    let zero = sites.iter().position(|s| matches!(s, NewSite::Lower { .. })).unwrap();
    sites.rotate_left(zero);
    let NewSite::Lower { sign: at_zero } = sites[0] else {
        unreachable!()
    };
    let first_side = sites.iter().find_map(|s| match *s {
        NewSite::Side { corner, .. } => Some(corner),
        _ => None,
    });
    let omega = sign(first_side != Some(Corner::After));

    let mut chord_signs: Vec<(u32, i8, i8)> = Vec::new();
    let mut new_sites = Vec::with_capacity(sites.len());
    let mut side_colors = Vec::new();
    for s in &sites {
        match *s {
            NewSite::Lower { .. } => new_sites.push(Site::TLower),
            NewSite::Chord { chord, sign } => {
                match chord_signs.iter_mut().find(|(c, _, _)| *c == chord) {
                    Some(entry) => entry.2 = sign,
                    None => chord_signs.push((chord, sign, 0)),
                }
                new_sites.push(Site::Chord(chord));
            }
            NewSite::Side { sign, .. } => {
                new_sites.push(if side_colors.is_empty() {
                    Site::TSideA
                } else {
                    Site::TSideB
                });
                side_colors.push(ChordColor::from_cross(sign != omega));
            }
        }
    }
    let edges = EdgeColors::new(
        ChordColor::from_cross(-at_zero != omega),
        side_colors[0],
        side_colors[1],
    );
    let colors = chord_signs
        .iter()
        .map(|&(c, first, second)| (c, ChordColor::from_cross(first != second)));
    let reversed = TDiagram::new(&new_sites, colors, edges)?;
    // The walk reads (0, 1b, 1a) exactly when it meets the After side first.
    Ok(if omega > 0 { reversed } else { reversed.reflect() })
}

/// Canonical code of the reverse diagram. SN codes come back unchanged since
/// codes do not record polarity.
pub fn reverse_code(code: &DiagramCode) -> Result<DiagramCode, Error> {
    match code.to_diagram() {
        Diagram::Sc(t) => Ok(Diagram::Sc(reverse_t(&t)?).canonical_code()),
        Diagram::Sn(c) => Ok(Diagram::Sn(reverse_c(&c)).canonical_code()),
        Diagram::Base(_) => Err(Error::KindMismatch),
    }
}

/// Fills in reverse partners for an SC catalog. Projective-plane entries have
/// no T-diagram reverse and are left without a partner.
pub fn pair_catalog(catalog: &mut Catalog) -> Result<(), Error> {
    if catalog.query.kind != CodeKind::Sc {
        return Err(Error::KindMismatch);
    }
    if catalog.query.surface == SurfaceClass::nonorientable(1) {
        return Ok(());
    }
    let partners = catalog
        .entries
        .iter()
        .map(|e| reverse_code(&e.code))
        .collect::<Result<Vec<_>, _>>()?;
    for p in &partners {
        if !catalog.entries.iter().any(|e| &e.code == p) {
            return Err(Error::PartnerNotInCatalog);
        }
    }
    for (entry, partner) in catalog.entries.iter_mut().zip(partners) {
        entry.self_reverse = entry.code == partner;
        entry.reverse_partner = Some(partner);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Polarity;
    use alloc::string::ToString;

    fn rev(text: &str) -> alloc::string::String {
        reverse_code(&DiagramCode::parse(CodeKind::Sc, text).unwrap())
            .unwrap()
            .to_string()
    }

    #[test]
    fn torus_is_self_reverse() {
        assert_eq!(rev("0' 1' 1'"), "0' 1' 1'");
    }

    #[test]
    fn self_reverse_example() {
        assert_eq!(rev("0 1' 2 1 2"), "0 1' 2 1 2");
    }

    #[test]
    fn known_pair() {
        assert_eq!(rev("0 2 1 1' 2"), "0' 1 2 1 2");
        assert_eq!(rev("0' 1 2 1 2"), "0 2 1 1' 2");
    }

    #[test]
    fn two_cycles_rejected() {
        let code = DiagramCode::parse(CodeKind::Sc, "0' 1 1").unwrap();
        assert_eq!(reverse_code(&code), Err(Error::NotOneCycled));
    }

    #[test]
    fn c_reverse_flips_polarity() {
        let c = DiagramCode::parse(CodeKind::Sn, "1 2 1 0 2").unwrap().to_diagram();
        let Diagram::Sn(c) = c else { panic!() };
        let r = reverse_c(&c);
        assert_eq!(r.polarity(), Polarity::Sink);
        assert_eq!(reverse_c(&r), c);
    }
}
