//! Linear codes of diagrams.
//!
//! An SN code walks the circle from the first end of the marked arc, writing
//! `0` for the other arc end and numbering chords by first encounter; an SC code
//! walks from the lower end of T (`0`), writes `1` for both side ends and numbers
//! chords from `2`. A dash follows the first number of a cross chord and every
//! number of a cross T-edge. Base chord diagrams use the SN numbering without a
//! `0`.
//!
//! Text form is space separated (`1' 2 1 0 3 2 3`). A string without whitespace
//! is read as the compact form (`1'210323`), one digit per number.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::diagram::{CDiagram, ChordColor, ChordDiagram, Diagram, Direction, EdgeColors, Polarity, Site, TDiagram};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeKind {
    Base,
    Sn,
    Sc,
}

impl CodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CodeKind::Base => "base",
            CodeKind::Sn => "sn",
            CodeKind::Sc => "sc",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "base" => Some(CodeKind::Base),
            "sn" => Some(CodeKind::Sn),
            "sc" => Some(CodeKind::Sc),
            _ => None,
        }
    }

    /// Smallest chord number used by codes of this kind.
    fn first_chord_number(self) -> u32 {
        match self {
            CodeKind::Sc => 2,
            _ => 1,
        }
    }
}

/// A number with an optional dash. Ordered by number, then undashed first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeToken {
    pub number: u32,
    pub dashed: bool,
}

impl CodeToken {
    pub fn new(number: u32, dashed: bool) -> Self {
        CodeToken { number, dashed }
    }
}

impl fmt::Display for CodeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number)?;
        if self.dashed {
            f.write_char('\'')?;
        }
        Ok(())
    }
}

/// A validated code. Comparison is lexicographic over the tokens.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramCode {
    kind: CodeKind,
    tokens: Vec<CodeToken>,
}

impl DiagramCode {
    pub fn new(kind: CodeKind, tokens: Vec<CodeToken>) -> Result<Self, Error> {
        validate(kind, &tokens)?;
        Ok(DiagramCode { kind, tokens })
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn tokens(&self) -> &[CodeToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn chord_count(&self) -> usize {
        let fixed = match self.kind {
            CodeKind::Base => 0,
            CodeKind::Sn => 1,
            CodeKind::Sc => 3,
        };
        (self.tokens.len() - fixed) / 2
    }

    /// Parses text of a known kind. `-` denotes the empty base code.
    pub fn parse(kind: CodeKind, text: &str) -> Result<Self, Error> {
        DiagramCode::new(kind, tokenize(text)?)
    }

    /// Parses text, taking the kind from a `base:`/`sn:`/`sc:` prefix if present
    /// and otherwise guessing: no `0` means a base diagram, a leading `0` an SC
    /// code, anything else an SN code. SN codes that start with `0` need the
    /// prefix.
    pub fn parse_auto(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        if let Some((prefix, rest)) = text.split_once(':') {
            if let Some(kind) = CodeKind::from_name(prefix.trim()) {
                return DiagramCode::parse(kind, rest);
            }
            return Err(Error::Syntax { position: 0 });
        }
        let tokens = tokenize(text)?;
        let kind = match tokens.iter().position(|t| t.number == 0) {
            None => CodeKind::Base,
            Some(0) => CodeKind::Sc,
            Some(_) => CodeKind::Sn,
        };
        DiagramCode::new(kind, tokens)
    }

    /// Concatenated form, available when every number is a single digit.
    pub fn compact(&self) -> Option<String> {
        if self.tokens.iter().any(|t| t.number > 9) {
            return None;
        }
        if self.tokens.is_empty() {
            return Some(String::from("-"));
        }
        let mut s = String::new();
        for t in &self.tokens {
            let _ = write!(s, "{}", t);
        }
        Some(s)
    }

    /// Rebuilds the unique diagram whose counterclockwise code is `self`.
    pub fn to_diagram(&self) -> Diagram {
        let first = self.kind.first_chord_number();
        let chord = |t: &CodeToken| Site::Chord(t.number - first);
        let mut colors = alloc::vec![ChordColor::Plain; self.chord_count()];
        let mut seen = alloc::vec![false; self.chord_count()];
        let mut mark = |t: &CodeToken| {
            let c = (t.number - first) as usize;
            if !seen[c] {
                seen[c] = true;
                colors[c] = ChordColor::from_cross(t.dashed);
            }
        };
        match self.kind {
            CodeKind::Base => {
                let sites = self.tokens.iter().map(chord).collect();
                self.tokens.iter().for_each(&mut mark);
                Diagram::Base(ChordDiagram::from_parts(sites, colors))
            }
            CodeKind::Sn => {
                let mut sites = alloc::vec![Site::ArcStart];
                for t in &self.tokens {
                    if t.number == 0 {
                        sites.push(Site::ArcEnd);
                    } else {
                        sites.push(chord(t));
                        mark(t);
                    }
                }
                Diagram::Sn(CDiagram::from_parts(sites, colors, Polarity::Source))
            }
            CodeKind::Sc => {
                let mut sites = Vec::with_capacity(self.tokens.len());
                let mut edges = EdgeColors::default();
                let mut sides = 0;
                for t in &self.tokens {
                    match t.number {
                        0 => {
                            sites.push(Site::TLower);
                            edges.lower = ChordColor::from_cross(t.dashed);
                        }
                        1 => {
                            if sides == 0 {
                                sites.push(Site::TSideA);
                                edges.side_a = ChordColor::from_cross(t.dashed);
                            } else {
                                sites.push(Site::TSideB);
                                edges.side_b = ChordColor::from_cross(t.dashed);
                            }
                            sides += 1;
                        }
                        _ => {
                            sites.push(chord(t));
                            mark(t);
                        }
                    }
                }
                Diagram::Sc(TDiagram::from_parts(sites, colors, edges))
            }
        }
    }
}

impl fmt::Display for DiagramCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return f.write_char('-');
        }
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_char(' ')?;
            }
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

fn tokenize(text: &str) -> Result<Vec<CodeToken>, Error> {
    let text = text.trim();
    if text == "-" {
        return Ok(Vec::new());
    }
    if text.is_empty() {
        return Err(Error::Syntax { position: 0 });
    }
    let mut tokens = Vec::new();
    if text.contains(char::is_whitespace) {
        let mut offset = 0;
        for word in text.split(char::is_whitespace) {
            if !word.is_empty() {
                tokens.push(word_token(word, offset)?);
            }
            offset += word.len() + 1;
        }
    } else {
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if !c.is_ascii_digit() {
                return Err(Error::Syntax { position: i });
            }
            let dashed = bytes.get(i + 1) == Some(&b'\'');
            tokens.push(CodeToken::new((c - b'0') as u32, dashed));
            i += if dashed { 2 } else { 1 };
        }
    }
    Ok(tokens)
}

fn word_token(word: &str, offset: usize) -> Result<CodeToken, Error> {
    let (digits, dashed) = match word.strip_suffix('\'') {
        Some(d) => (d, true),
        None => (word, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Syntax { position: offset });
    }
    let number = digits.parse::<u32>().map_err(|_| Error::Syntax { position: offset })?;
    Ok(CodeToken::new(number, dashed))
}

fn validate(kind: CodeKind, tokens: &[CodeToken]) -> Result<(), Error> {
    let first = kind.first_chord_number();
    let max = tokens.iter().map(|t| t.number).max().unwrap_or(0);
    let mut counts = alloc::vec![0usize; max as usize + 1];
    for t in tokens {
        counts[t.number as usize] += 1;
    }
    match kind {
        CodeKind::Base => {
            if counts.first().copied().unwrap_or(0) > 0 {
                return Err(Error::BadMultiplicity {
                    number: 0,
                    count: counts[0],
                });
            }
        }
        CodeKind::Sn => {
            if counts[0] != 1 {
                return Err(Error::BadMultiplicity {
                    number: 0,
                    count: counts[0],
                });
            }
            if tokens.iter().any(|t| t.number == 0 && t.dashed) {
                return Err(Error::DashOnArcEnd);
            }
        }
        CodeKind::Sc => {
            if counts[0] != 1 {
                return Err(Error::BadMultiplicity {
                    number: 0,
                    count: counts[0],
                });
            }
            let ones = counts.get(1).copied().unwrap_or(0);
            if ones != 2 {
                return Err(Error::BadTCount { count: ones });
            }
            if tokens[0].number != 0 {
                return Err(Error::LowerNotFirst);
            }
        }
    }
    for number in first..=max {
        let count = counts[number as usize];
        if count != 2 {
            return Err(Error::BadMultiplicity { number, count });
        }
    }
    let mut next = first;
    let mut seen = alloc::vec![false; max as usize + 1];
    for (position, t) in tokens.iter().enumerate() {
        if t.number < first {
            continue;
        }
        if seen[t.number as usize] {
            if t.dashed {
                return Err(Error::MisplacedDash { position });
            }
        } else {
            if t.number != next {
                return Err(Error::BadFirstEncounterOrder { position });
            }
            seen[t.number as usize] = true;
            next += 1;
        }
    }
    Ok(())
}

/// Numbers chords by first encounter and dashes first ends of cross chords.
struct Numbering<'a> {
    colors: &'a [ChordColor],
    assigned: Vec<Option<u32>>,
    next: u32,
}

impl<'a> Numbering<'a> {
    fn new(colors: &'a [ChordColor], first: u32) -> Self {
        Numbering {
            colors,
            assigned: alloc::vec![None; colors.len()],
            next: first,
        }
    }

    fn token(&mut self, chord: u32) -> CodeToken {
        match self.assigned[chord as usize] {
            Some(n) => CodeToken::new(n, false),
            None => {
                let n = self.next;
                self.next += 1;
                self.assigned[chord as usize] = Some(n);
                CodeToken::new(n, self.colors[chord as usize].is_cross())
            }
        }
    }
}

impl ChordDiagram {
    /// Code read from site `start` in direction `dir`.
    pub fn code_from(&self, start: usize, dir: Direction) -> DiagramCode {
        let arr = self.arrangement();
        let mut numbering = Numbering::new(self.colors(), 1);
        let tokens = (0..arr.len())
            .map(|k| numbering.token(arr.sites()[arr.step(start, k, dir)].chord().unwrap()))
            .collect();
        DiagramCode {
            kind: CodeKind::Base,
            tokens,
        }
    }

    /// Minimum code over every starting site and both directions.
    pub fn canonical_code(&self) -> DiagramCode {
        let m = self.arrangement().len();
        let mut best = self.code_from(0, Direction::Counterclockwise);
        for start in 0..m {
            for dir in [Direction::Counterclockwise, Direction::Clockwise] {
                let c = self.code_from(start, dir);
                if c < best {
                    best = c;
                }
            }
        }
        best
    }
}

impl CDiagram {
    /// Counterclockwise: from `ArcStart`, with `ArcEnd` as 0. Clockwise: the
    /// mirror reading, from `ArcEnd` with `ArcStart` as 0.
    pub fn code(&self, dir: Direction) -> DiagramCode {
        let arr = self.arrangement();
        let (start, zero) = match dir {
            Direction::Counterclockwise => (0, Site::ArcEnd),
            Direction::Clockwise => (self.arc_end(), Site::ArcStart),
        };
        let mut numbering = Numbering::new(self.colors(), 1);
        let tokens = (1..arr.len())
            .map(|k| match arr.sites()[arr.step(start, k, dir)] {
                Site::Chord(c) => numbering.token(c),
                s => {
                    debug_assert_eq!(s, zero);
                    CodeToken::new(0, false)
                }
            })
            .collect();
        DiagramCode {
            kind: CodeKind::Sn,
            tokens,
        }
    }
}

impl TDiagram {
    /// Code read from `TLower` in direction `dir`.
    pub fn code(&self, dir: Direction) -> DiagramCode {
        let arr = self.arrangement();
        let edges = self.edges();
        let mut numbering = Numbering::new(self.chord_colors(), 2);
        let tokens = (0..arr.len())
            .map(|k| match arr.sites()[arr.step(0, k, dir)] {
                Site::TLower => CodeToken::new(0, edges.lower.is_cross()),
                Site::TSideA => CodeToken::new(1, edges.side_a.is_cross()),
                Site::TSideB => CodeToken::new(1, edges.side_b.is_cross()),
                Site::Chord(c) => numbering.token(c),
                _ => unreachable!("arc token in a T-diagram"),
            })
            .collect();
        DiagramCode {
            kind: CodeKind::Sc,
            tokens,
        }
    }
}

/// Code of `d` read in direction `dir` from its base point. Base diagrams are
/// read from site 0.
pub fn emit_code(d: &Diagram, dir: Direction) -> DiagramCode {
    match d {
        Diagram::Base(b) => b.code_from(0, dir),
        Diagram::Sn(c) => c.code(dir),
        Diagram::Sc(t) => t.code(dir),
    }
}

pub fn parse_code(code: &DiagramCode) -> Diagram {
    code.to_diagram()
}

/// The smaller of the two reading directions (all rotations for base
/// diagrams, which have no base point).
pub fn canonical_code(d: &Diagram) -> DiagramCode {
    match d {
        Diagram::Base(b) => b.canonical_code(),
        _ => {
            let ccw = emit_code(d, Direction::Counterclockwise);
            let cw = emit_code(d, Direction::Clockwise);
            if cw < ccw {
                cw
            } else {
                ccw
            }
        }
    }
}
