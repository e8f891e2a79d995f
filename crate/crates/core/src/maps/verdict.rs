use std::fmt;

use crate::freealg::FreePoly;
use crate::ratfunc::RatFunc;
use crate::rational::Rational;
use crate::ring::{CommPoly, Mat2Poly};

use super::word::{CommGen, FreeGen, TameWord};

/// The outcome of a decision procedure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerdictTag {
    Automorphism,
    NotAutomorphism,
    Tame,
    NotTame,
    ZTame,
    NotZTame,
    ZWild,
    Wild,
    Coordinate,
    NotCoordinate,
    Inconclusive,
}

impl VerdictTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictTag::Automorphism => "Automorphism",
            VerdictTag::NotAutomorphism => "NotAutomorphism",
            VerdictTag::Tame => "Tame",
            VerdictTag::NotTame => "NotTame",
            VerdictTag::ZTame => "ZTame",
            VerdictTag::NotZTame => "NotZTame",
            VerdictTag::ZWild => "ZWild",
            VerdictTag::Wild => "Wild",
            VerdictTag::Coordinate => "Coordinate",
            VerdictTag::NotCoordinate => "NotCoordinate",
            VerdictTag::Inconclusive => "Inconclusive",
        }
    }

    /// Whether the question was settled one way or the other.
    pub fn is_decided(&self) -> bool {
        !matches!(self, VerdictTag::Inconclusive)
    }
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Replayable evidence attached to a verdict.
#[derive(Clone, PartialEq, Debug)]
pub enum Certificate {
    /// A word of elementary generators of `K[x_1..x_n]` whose product is
    /// the decided map.
    CommWord(TameWord<CommGen<Rational>>),
    /// A word over `K(z)` coefficients; for `K[z][x,y]` questions the word
    /// recomposes the map with `z` moved into the coefficient field.
    CommWordZ(TameWord<CommGen<RatFunc>>),
    /// A word of tame generators of the free algebra fixing `z`.
    FreeWord(TameWord<FreeGen>),
    /// A complementary coordinate: together with the input it forms an
    /// automorphism pair.
    CommMate(CommPoly<Rational>),
    /// A complementary coordinate over `K(z)` coefficients.
    CommMateZ(CommPoly<RatFunc>),
    /// A complementary free coordinate.
    FreeMate(FreePoly),
    /// The gradient generates the unit ideal; replay by recomputing the
    /// reduced Groebner basis of `(fx, fy)`.
    UnimodularGradient {
        fx: CommPoly<Rational>,
        fy: CommPoly<Rational>,
    },
    /// A stuck leading-term pair from the gradient Euclidean test:
    /// neither leading term divides the other.
    StuckPair {
        p: CommPoly<Rational>,
        q: CommPoly<Rational>,
    },
    /// A matrix over `K[z1,z2]` whose elementary reduction jams on the
    /// first-column pair `(a, b)`.
    Ge2Obstruction {
        matrix: Mat2Poly<Rational>,
        a: CommPoly<Rational>,
        b: CommPoly<Rational>,
    },
    /// The metabelian 2x2 Jacobian after killing the non-z variables,
    /// together with the stuck first-column pair of its reduction.
    MetabelianObstruction {
        matrix: Mat2Poly<Rational>,
        a: CommPoly<Rational>,
        b: CommPoly<Rational>,
    },
    /// Top bidegree forms that admit no elementary reduction.
    BidegreeDeadlock { u: FreePoly, v: FreePoly },
    /// Free-text grounds for an inconclusive or negative answer when no
    /// structured witness applies.
    Reason(String),
}

/// A decision together with its evidence and a human-readable trace of the
/// steps that produced it.
#[derive(Clone, PartialEq, Debug)]
pub struct Verdict {
    pub tag: VerdictTag,
    pub certificate: Option<Certificate>,
    pub trace: Vec<String>,
}

impl Verdict {
    pub fn new(tag: VerdictTag) -> Self {
        Verdict {
            tag,
            certificate: None,
            trace: Vec::new(),
        }
    }

    pub fn with_certificate(tag: VerdictTag, certificate: Certificate) -> Self {
        Verdict {
            tag,
            certificate: Some(certificate),
            trace: Vec::new(),
        }
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.trace.push(line.into());
        self
    }

    pub fn comm_word(&self) -> Option<&TameWord<CommGen<Rational>>> {
        match &self.certificate {
            Some(Certificate::CommWord(w)) => Some(w),
            _ => None,
        }
    }

    pub fn comm_word_z(&self) -> Option<&TameWord<CommGen<RatFunc>>> {
        match &self.certificate {
            Some(Certificate::CommWordZ(w)) => Some(w),
            _ => None,
        }
    }

    pub fn free_word(&self) -> Option<&TameWord<FreeGen>> {
        match &self.certificate {
            Some(Certificate::FreeWord(w)) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)
    }
}
