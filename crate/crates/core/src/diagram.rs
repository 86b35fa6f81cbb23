//! Chord diagrams on the unit circle and their decorated variants.
//!
//! A diagram is a cyclic sequence of [`Site`]s read counterclockwise. Plain
//! [`ChordDiagram`]s carry only chord ends; [`CDiagram`]s add the two ends of a
//! marked arc; [`TDiagram`]s add the three ends of a T-graph. Constructors
//! validate the token sequence and renumber chords in first-encounter order from
//! the diagram's base point, so two diagrams that differ only by a rotation and a
//! relabelling compare equal.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::code::{self, DiagramCode};
use crate::error::Error;

/// One marked point on the circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Site {
    Chord(u32),
    ArcStart,
    ArcEnd,
    TLower,
    TSideA,
    TSideB,
}

impl Site {
    pub fn chord(self) -> Option<u32> {
        match self {
            Site::Chord(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_arc(self) -> bool {
        matches!(self, Site::ArcStart | Site::ArcEnd)
    }

    pub fn is_t(self) -> bool {
        matches!(self, Site::TLower | Site::TSideA | Site::TSideB)
    }
}

/// The two chord (and T-edge) colours. `Cross` is drawn with an X and
/// corresponds to a twisted band.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChordColor {
    #[default]
    Plain,
    Cross,
}

impl ChordColor {
    pub fn from_cross(cross: bool) -> Self {
        if cross {
            ChordColor::Cross
        } else {
            ChordColor::Plain
        }
    }

    pub fn is_cross(self) -> bool {
        self == ChordColor::Cross
    }
}

/// Whether the saddle-node's node is a source or a sink.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    #[default]
    Source,
    Sink,
}

impl Polarity {
    pub fn toggled(self) -> Self {
        match self {
            Polarity::Source => Polarity::Sink,
            Polarity::Sink => Polarity::Source,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Counterclockwise,
    Clockwise,
}

impl Direction {
    pub fn step(self) -> isize {
        match self {
            Direction::Counterclockwise => 1,
            Direction::Clockwise => -1,
        }
    }
}

/// Validated cyclic sequence of sites.
///
/// Invariants: every chord id occurs exactly twice; arc tokens occur both or not
/// at all, each at most once; T tokens occur all three or not at all, each at most
/// once; arc and T tokens never share an arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicArrangement {
    sites: Vec<Site>,
}

impl CyclicArrangement {
    pub fn new(sites: Vec<Site>) -> Result<Self, Error> {
        let mut chords: BTreeMap<u32, usize> = BTreeMap::new();
        let (mut arc_start, mut arc_end) = (0usize, 0usize);
        let (mut lower, mut side_a, mut side_b) = (0usize, 0usize, 0usize);
        for &s in &sites {
            match s {
                Site::Chord(c) => *chords.entry(c).or_insert(0) += 1,
                Site::ArcStart => arc_start += 1,
                Site::ArcEnd => arc_end += 1,
                Site::TLower => lower += 1,
                Site::TSideA => side_a += 1,
                Site::TSideB => side_b += 1,
            }
        }
        if let Some((&chord, &count)) = chords.iter().find(|(_, &n)| n != 2) {
            return Err(Error::ChordArityError { chord, count });
        }
        if arc_start > 1 || arc_end > 1 {
            return Err(Error::DuplicateArcToken);
        }
        if lower > 1 || side_a > 1 || side_b > 1 {
            return Err(Error::DuplicateTToken);
        }
        let arcs = arc_start + arc_end;
        let ts = lower + side_a + side_b;
        if arcs > 0 && ts > 0 {
            return Err(Error::MixedTokenKinds);
        }
        if arcs == 1 {
            return Err(Error::MissingArcToken);
        }
        if ts > 0 && ts < 3 {
            return Err(Error::MissingTToken);
        }
        Ok(CyclicArrangement { sites })
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn chord_count(&self) -> usize {
        self.sites.iter().filter(|s| s.chord().is_some()).count() / 2
    }

    pub fn has_arc(&self) -> bool {
        self.sites.iter().any(|s| s.is_arc())
    }

    pub fn has_t(&self) -> bool {
        self.sites.iter().any(|s| s.is_t())
    }

    pub fn position(&self, site: Site) -> Option<usize> {
        self.sites.iter().position(|&s| s == site)
    }

    /// Index of the other end of the chord at `index`.
    pub fn partner(&self, index: usize) -> Option<usize> {
        let c = self.sites[index].chord()?;
        self.sites
            .iter()
            .enumerate()
            .position(|(i, &s)| i != index && s == Site::Chord(c))
    }

    /// Site `k` steps from `from` in `dir`.
    pub fn step(&self, from: usize, k: usize, dir: Direction) -> usize {
        let m = self.sites.len() as isize;
        (from as isize + dir.step() * k as isize).rem_euclid(m) as usize
    }

    /// Reads the whole circle starting at `start` in `dir` and renumbers chords
    /// 0, 1, 2, ... by first encounter. Returns the new sequence and, for each new
    /// chord id, the old one.
    pub(crate) fn read_from(&self, start: usize, dir: Direction) -> (Vec<Site>, Vec<u32>) {
        let mut renamed: BTreeMap<u32, u32> = BTreeMap::new();
        let mut old_ids = Vec::new();
        let mut out = Vec::with_capacity(self.sites.len());
        for k in 0..self.sites.len() {
            let s = self.sites[self.step(start, k, dir)];
            out.push(match s {
                Site::Chord(c) => {
                    let next = renamed.len() as u32;
                    let id = *renamed.entry(c).or_insert_with(|| {
                        old_ids.push(c);
                        next
                    });
                    Site::Chord(id)
                }
                other => other,
            });
        }
        (out, old_ids)
    }
}

fn color_table(
    arrangement: &CyclicArrangement,
    colors: impl IntoIterator<Item = (u32, ChordColor)>,
) -> Result<BTreeMap<u32, ChordColor>, Error> {
    let mut table = BTreeMap::new();
    for (c, color) in colors {
        if !arrangement.sites().contains(&Site::Chord(c)) {
            return Err(Error::UnknownChord(c));
        }
        table.insert(c, color);
    }
    Ok(table)
}

fn remap_colors(old_ids: &[u32], table: &BTreeMap<u32, ChordColor>) -> Vec<ChordColor> {
    old_ids
        .iter()
        .map(|c| table.get(c).copied().unwrap_or_default())
        .collect()
}

/// A chord diagram with coloured chords and no further decoration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    arrangement: CyclicArrangement,
    colors: Vec<ChordColor>,
}

impl ChordDiagram {
    /// Builds a diagram from chord-end sites. Chords not listed in `colors` are
    /// plain.
    pub fn new(sites: &[Site], colors: impl IntoIterator<Item = (u32, ChordColor)>) -> Result<Self, Error> {
        let arrangement = CyclicArrangement::new(sites.to_vec())?;
        if arrangement.has_arc() || arrangement.has_t() {
            return Err(Error::MixedTokenKinds);
        }
        let table = color_table(&arrangement, colors)?;
        let (sites, old) = arrangement.read_from(0, Direction::Counterclockwise);
        Ok(ChordDiagram {
            arrangement: CyclicArrangement { sites },
            colors: remap_colors(&old, &table),
        })
    }

    /// Fast path for already-normalized data produced inside the crate.
    pub(crate) fn from_parts(sites: Vec<Site>, colors: Vec<ChordColor>) -> Self {
        ChordDiagram {
            arrangement: CyclicArrangement { sites },
            colors,
        }
    }

    pub fn empty() -> Self {
        ChordDiagram::from_parts(Vec::new(), Vec::new())
    }

    pub fn arrangement(&self) -> &CyclicArrangement {
        &self.arrangement
    }

    pub fn colors(&self) -> &[ChordColor] {
        &self.colors
    }

    pub fn color(&self, chord: u32) -> ChordColor {
        self.colors[chord as usize]
    }

    pub fn chord_count(&self) -> usize {
        self.colors.len()
    }

    pub fn reflect(&self) -> Self {
        let (sites, old) = self.arrangement.read_from(0, Direction::Clockwise);
        let colors = old.iter().map(|&c| self.colors[c as usize]).collect();
        ChordDiagram::from_parts(sites, colors)
    }
}

/// Chord diagram with a marked arc: the invariant of an optimal SN-flow.
///
/// The arc runs counterclockwise from `ArcStart` to `ArcEnd` and may contain
/// chord ends. Stored rotated so that `ArcStart` is site 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CDiagram {
    arrangement: CyclicArrangement,
    colors: Vec<ChordColor>,
    polarity: Polarity,
}

impl CDiagram {
    pub fn new(
        sites: &[Site],
        colors: impl IntoIterator<Item = (u32, ChordColor)>,
        polarity: Polarity,
    ) -> Result<Self, Error> {
        let arrangement = CyclicArrangement::new(sites.to_vec())?;
        if !arrangement.has_arc() {
            return Err(if arrangement.has_t() {
                Error::MixedTokenKinds
            } else {
                Error::MissingArcToken
            });
        }
        let table = color_table(&arrangement, colors)?;
        let start = arrangement.position(Site::ArcStart).unwrap();
        let (sites, old) = arrangement.read_from(start, Direction::Counterclockwise);
        Ok(CDiagram {
            arrangement: CyclicArrangement { sites },
            colors: remap_colors(&old, &table),
            polarity,
        })
    }

    pub(crate) fn from_parts(sites: Vec<Site>, colors: Vec<ChordColor>, polarity: Polarity) -> Self {
        CDiagram {
            arrangement: CyclicArrangement { sites },
            colors,
            polarity,
        }
    }

    pub fn arrangement(&self) -> &CyclicArrangement {
        &self.arrangement
    }

    pub fn colors(&self) -> &[ChordColor] {
        &self.colors
    }

    pub fn color(&self, chord: u32) -> ChordColor {
        self.colors[chord as usize]
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn with_polarity(&self, polarity: Polarity) -> Self {
        CDiagram {
            polarity,
            ..self.clone()
        }
    }

    pub fn chord_count(&self) -> usize {
        self.colors.len()
    }

    /// Index of `ArcEnd`; `ArcStart` is always at 0.
    pub fn arc_end(&self) -> usize {
        self.arrangement.position(Site::ArcEnd).unwrap()
    }

    /// The underlying chord diagram (arc ends dropped).
    pub fn chord_diagram(&self) -> ChordDiagram {
        let sites: Vec<Site> = self
            .arrangement
            .sites()
            .iter()
            .copied()
            .filter(|s| !s.is_arc())
            .collect();
        ChordDiagram::from_parts(sites, self.colors.clone())
    }

    /// Mirror image. The marked arc keeps its point set, so its first end (in
    /// the counterclockwise sense) becomes the old `ArcEnd`.
    pub fn reflect(&self) -> Self {
        let end = self.arc_end();
        let (sites, old) = self.arrangement.read_from(end, Direction::Clockwise);
        let sites = sites
            .into_iter()
            .map(|s| match s {
                Site::ArcStart => Site::ArcEnd,
                Site::ArcEnd => Site::ArcStart,
                other => other,
            })
            .collect();
        let colors = old.iter().map(|&c| self.colors[c as usize]).collect();
        CDiagram::from_parts(sites, colors, self.polarity)
    }
}

/// Colours of the three T-graph edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColors {
    pub lower: ChordColor,
    pub side_a: ChordColor,
    pub side_b: ChordColor,
}

impl EdgeColors {
    pub fn new(lower: ChordColor, side_a: ChordColor, side_b: ChordColor) -> Self {
        EdgeColors { lower, side_a, side_b }
    }

    pub fn uniform(color: ChordColor) -> Self {
        EdgeColors::new(color, color, color)
    }

    pub fn all_same(&self) -> bool {
        self.lower == self.side_a && self.side_a == self.side_b
    }

    fn swapped_sides(self) -> Self {
        EdgeColors::new(self.lower, self.side_b, self.side_a)
    }
}

/// Chord diagram with an inscribed T-graph: the invariant of an optimal SC-flow.
///
/// Stored rotated so that `TLower` is site 0; `TSideA` is always the first side
/// end met counterclockwise from `TLower`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TDiagram {
    arrangement: CyclicArrangement,
    chord_colors: Vec<ChordColor>,
    edges: EdgeColors,
}

impl TDiagram {
    /// `edges` refers to the side tokens as given; they are relabelled if
    /// `TSideB` comes first counterclockwise from `TLower`.
    pub fn new(
        sites: &[Site],
        chord_colors: impl IntoIterator<Item = (u32, ChordColor)>,
        edges: EdgeColors,
    ) -> Result<Self, Error> {
        let arrangement = CyclicArrangement::new(sites.to_vec())?;
        if !arrangement.has_t() {
            return Err(if arrangement.has_arc() {
                Error::MixedTokenKinds
            } else {
                Error::MissingTToken
            });
        }
        let table = color_table(&arrangement, chord_colors)?;
        let start = arrangement.position(Site::TLower).unwrap();
        let (sites, old) = arrangement.read_from(start, Direction::Counterclockwise);
        Ok(Self::relabelled(sites, remap_colors(&old, &table), edges))
    }

    /// Enforces the side-labelling convention on a sequence that starts at TLower.
    fn relabelled(sites: Vec<Site>, chord_colors: Vec<ChordColor>, edges: EdgeColors) -> Self {
        let first_side = sites
            .iter()
            .copied()
            .find(|&s| matches!(s, Site::TSideA | Site::TSideB));
        let (sites, edges) = if first_side == Some(Site::TSideB) {
            let sites = sites
                .into_iter()
                .map(|s| match s {
                    Site::TSideA => Site::TSideB,
                    Site::TSideB => Site::TSideA,
                    other => other,
                })
                .collect();
            (sites, edges.swapped_sides())
        } else {
            (sites, edges)
        };
        TDiagram {
            arrangement: CyclicArrangement { sites },
            chord_colors,
            edges,
        }
    }

    pub(crate) fn from_parts(sites: Vec<Site>, chord_colors: Vec<ChordColor>, edges: EdgeColors) -> Self {
        Self::relabelled(sites, chord_colors, edges)
    }

    pub fn arrangement(&self) -> &CyclicArrangement {
        &self.arrangement
    }

    pub fn chord_colors(&self) -> &[ChordColor] {
        &self.chord_colors
    }

    pub fn chord_color(&self, chord: u32) -> ChordColor {
        self.chord_colors[chord as usize]
    }

    pub fn edges(&self) -> EdgeColors {
        self.edges
    }

    pub fn chord_count(&self) -> usize {
        self.chord_colors.len()
    }

    pub fn side_a(&self) -> usize {
        self.arrangement.position(Site::TSideA).unwrap()
    }

    pub fn side_b(&self) -> usize {
        self.arrangement.position(Site::TSideB).unwrap()
    }

    pub fn reflect(&self) -> Self {
        let (sites, old) = self.arrangement.read_from(0, Direction::Clockwise);
        let colors = old.iter().map(|&c| self.chord_colors[c as usize]).collect();
        Self::relabelled(sites, colors, self.edges)
    }
}

/// Any of the three diagram kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Diagram {
    Base(ChordDiagram),
    Sn(CDiagram),
    Sc(TDiagram),
}

impl Diagram {
    pub fn kind(&self) -> code::CodeKind {
        match self {
            Diagram::Base(_) => code::CodeKind::Base,
            Diagram::Sn(_) => code::CodeKind::Sn,
            Diagram::Sc(_) => code::CodeKind::Sc,
        }
    }

    pub fn arrangement(&self) -> &CyclicArrangement {
        match self {
            Diagram::Base(d) => d.arrangement(),
            Diagram::Sn(d) => d.arrangement(),
            Diagram::Sc(d) => d.arrangement(),
        }
    }

    pub fn chord_count(&self) -> usize {
        self.arrangement().chord_count()
    }

    pub fn chord_color(&self, chord: u32) -> ChordColor {
        match self {
            Diagram::Base(d) => d.color(chord),
            Diagram::Sn(d) => d.color(chord),
            Diagram::Sc(d) => d.chord_color(chord),
        }
    }

    pub fn reflect(&self) -> Self {
        match self {
            Diagram::Base(d) => Diagram::Base(d.reflect()),
            Diagram::Sn(d) => Diagram::Sn(d.reflect()),
            Diagram::Sc(d) => Diagram::Sc(d.reflect()),
        }
    }

    pub fn canonical_code(&self) -> DiagramCode {
        code::canonical_code(self)
    }
}

impl From<ChordDiagram> for Diagram {
    fn from(d: ChordDiagram) -> Self {
        Diagram::Base(d)
    }
}

impl From<CDiagram> for Diagram {
    fn from(d: CDiagram) -> Self {
        Diagram::Sn(d)
    }
}

impl From<TDiagram> for Diagram {
    fn from(d: TDiagram) -> Self {
        Diagram::Sc(d)
    }
}

/// Equivalence under rotations and reflections of the circle.
pub fn is_isomorphic(a: &Diagram, b: &Diagram) -> Result<bool, Error> {
    if a.kind() != b.kind() {
        return Err(Error::KindMismatch);
    }
    Ok(a.canonical_code() == b.canonical_code())
}

/// A closed surface, named by orientability and genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceClass {
    orientable: bool,
    genus: u32,
}

impl SurfaceClass {
    pub fn new(orientable: bool, genus: u32) -> Result<Self, Error> {
        if !orientable && genus == 0 {
            return Err(Error::UnreachableSurface);
        }
        Ok(SurfaceClass { orientable, genus })
    }

    pub fn orientable(genus: u32) -> Self {
        SurfaceClass {
            orientable: true,
            genus,
        }
    }

    /// Panics on genus 0.
    pub fn nonorientable(genus: u32) -> Self {
        assert!(genus >= 1, "nonorientable surfaces have genus >= 1");
        SurfaceClass {
            orientable: false,
            genus,
        }
    }

    pub fn from_euler(orientable: bool, chi: i64) -> Option<Self> {
        let deficit = 2 - chi;
        if deficit < 0 {
            return None;
        }
        if orientable {
            (deficit % 2 == 0).then(|| SurfaceClass::orientable((deficit / 2) as u32))
        } else {
            (deficit >= 1).then(|| SurfaceClass::nonorientable(deficit as u32))
        }
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn euler_characteristic(&self) -> i64 {
        if self.orientable {
            2 - 2 * self.genus as i64
        } else {
            2 - self.genus as i64
        }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} genus {}",
            if self.orientable { "orientable" } else { "nonorientable" },
            self.genus
        )
    }
}

/// `Site::Chord` for each id in order, handy for building sequences.
pub fn chord_sites(ids: &[u32]) -> Vec<Site> {
    ids.iter().map(|&c| Site::Chord(c)).collect()
}
