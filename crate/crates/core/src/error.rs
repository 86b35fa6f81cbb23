use core::fmt;

/// Everything that can go wrong while building, reading or transforming diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `ArcStart` or `ArcEnd` occurs more than once.
    DuplicateArcToken,
    /// A C-diagram is missing one of its arc ends.
    MissingArcToken,
    /// A chord id occurs a number of times other than two.
    ChordArityError { chord: u32, count: usize },
    /// Arc tokens and T tokens in one arrangement.
    MixedTokenKinds,
    /// A T-diagram is missing one of `TLower`, `TSideA`, `TSideB`.
    MissingTToken,
    /// One of the T tokens occurs more than once.
    DuplicateTToken,
    /// A colour was supplied for a chord id that is not in the arrangement.
    UnknownChord(u32),
    /// Two diagrams of different kinds were compared.
    KindMismatch,
    /// Code text could not be tokenized.
    Syntax { position: usize },
    /// A code number occurs the wrong number of times.
    BadMultiplicity { number: u32, count: usize },
    /// Chord numbers do not first appear as 1, 2, 3, ... (2, 3, ... for SC codes).
    BadFirstEncounterOrder { position: usize },
    /// An SN code carries a dash on its 0.
    DashOnArcEnd,
    /// An SC code without exactly two 1 tokens.
    BadTCount { count: usize },
    /// An SC code that does not start at the lower end of T.
    LowerNotFirst,
    /// A dash on the second occurrence of a chord number.
    MisplacedDash { position: usize },
    /// No closed surface matches the request (e.g. nonorientable genus 0).
    UnreachableSurface,
    /// SC flows on the sphere need several source circles; only the count is known.
    SphereUnsupported,
    /// Reversal needs a diagram whose ribbon surface has one boundary cycle.
    NotOneCycled,
    /// A reverse code fell outside the catalog it was computed from.
    PartnerNotInCatalog,
}

impl Error {
    /// Variant name, as reported on the diagnostic stream by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DuplicateArcToken => "DuplicateArcToken",
            Error::MissingArcToken => "MissingArcToken",
            Error::ChordArityError { .. } => "ChordArityError",
            Error::MixedTokenKinds => "MixedTokenKinds",
            Error::MissingTToken => "MissingTToken",
            Error::DuplicateTToken => "DuplicateTToken",
            Error::UnknownChord(_) => "UnknownChord",
            Error::KindMismatch => "KindMismatch",
            Error::Syntax { .. } => "Syntax",
            Error::BadMultiplicity { .. } => "BadMultiplicity",
            Error::BadFirstEncounterOrder { .. } => "BadFirstEncounterOrder",
            Error::DashOnArcEnd => "DashOnArcEnd",
            Error::BadTCount { .. } => "BadTCount",
            Error::LowerNotFirst => "LowerNotFirst",
            Error::MisplacedDash { .. } => "MisplacedDash",
            Error::UnreachableSurface => "UnreachableSurface",
            Error::SphereUnsupported => "SphereUnsupported",
            Error::NotOneCycled => "NotOneCycled",
            Error::PartnerNotInCatalog => "PartnerNotInCatalog",
        }
    }

    /// True for the errors that reject a surface rather than an input.
    pub fn is_unsupported_surface(&self) -> bool {
        matches!(self, Error::UnreachableSurface | Error::SphereUnsupported)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateArcToken => f.write_str("arc end token appears more than once"),
            Error::MissingArcToken => f.write_str("C-diagram needs both ArcStart and ArcEnd"),
            Error::ChordArityError { chord, count } => {
                write!(f, "chord {} appears {} time(s), expected 2", chord, count)
            }
            Error::MixedTokenKinds => f.write_str("arc tokens and T tokens cannot be mixed"),
            Error::MissingTToken => f.write_str("T-diagram needs TLower, TSideA and TSideB"),
            Error::DuplicateTToken => f.write_str("T token appears more than once"),
            Error::UnknownChord(c) => write!(f, "colour given for unknown chord {}", c),
            Error::KindMismatch => f.write_str("diagrams are of different kinds"),
            Error::Syntax { position } => write!(f, "unexpected character at offset {}", position),
            Error::BadMultiplicity { number, count } => {
                write!(f, "number {} appears {} time(s)", number, count)
            }
            Error::BadFirstEncounterOrder { position } => {
                write!(f, "token {} breaks first-encounter numbering", position)
            }
            Error::DashOnArcEnd => f.write_str("the arc end 0 carries no colour"),
            Error::BadTCount { count } => write!(f, "expected two 1 tokens, found {}", count),
            Error::LowerNotFirst => f.write_str("SC code must start with 0"),
            Error::MisplacedDash { position } => {
                write!(f, "dash on token {} which is a second chord end", position)
            }
            Error::UnreachableSurface => f.write_str("no closed surface of that kind"),
            Error::SphereUnsupported => write!(
                f,
                "SC flows on the sphere use several source circles ({} flows, not enumerated)",
                crate::enumerate::SPHERE_SC_FLOW_COUNT
            ),
            Error::NotOneCycled => f.write_str("diagram is not one-cycled"),
            Error::PartnerNotInCatalog => f.write_str("reverse code is not in the catalog"),
        }
    }
}

impl core::error::Error for Error {}
