//! Boolean property expressions over a fixed set of atoms.
//!
//! ```text
//! expr    := and ('|' and)*
//! and     := unary ('&' unary)*
//! unary   := '!' unary | primary
//! primary := ATOM | 'nil-ext-of' '(' expr ')' | 'csl-of' '(' expr ')' | '(' expr ')'
//! ```
//!
//! `&&` and `||` are accepted as spellings of `&` and `|`. Positions in
//! errors are 1-based character offsets; the end of input is `len + 1`.

use std::fmt;
use std::str::FromStr;

use crate::decomposition::{is_complete_semilattice_of, is_nil_extension, nil_extension_of_type, TypePredicate};
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, is_simple, restrict, IdealKind, Simplicity, IDEAL_SCAN_LIMIT};
use crate::regularity;
use crate::relations::{is_archimedean, Archimedean};
use crate::semigroup::OrderedSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Simple,
    LeftSimple,
    TSimple,
    Regular,
    PiRegular,
    IntraPiRegular,
    RightInverse,
    RightPiInverse,
    LeftPiInverse,
    PiInverse,
    Archimedean,
    LArchimedean,
    RArchimedean,
    TArchimedean,
}

impl Atom {
    pub const ALL: [Atom; 14] = [
        Atom::Simple,
        Atom::LeftSimple,
        Atom::TSimple,
        Atom::Regular,
        Atom::PiRegular,
        Atom::IntraPiRegular,
        Atom::RightInverse,
        Atom::RightPiInverse,
        Atom::LeftPiInverse,
        Atom::PiInverse,
        Atom::Archimedean,
        Atom::LArchimedean,
        Atom::RArchimedean,
        Atom::TArchimedean,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Atom::Simple => "simple",
            Atom::LeftSimple => "left-simple",
            Atom::TSimple => "t-simple",
            Atom::Regular => "regular",
            Atom::PiRegular => "pi-regular",
            Atom::IntraPiRegular => "intra-pi-regular",
            Atom::RightInverse => "right-inverse",
            Atom::RightPiInverse => "right-pi-inverse",
            Atom::LeftPiInverse => "left-pi-inverse",
            Atom::PiInverse => "pi-inverse",
            Atom::Archimedean => "archimedean",
            Atom::LArchimedean => "l-archimedean",
            Atom::RArchimedean => "r-archimedean",
            Atom::TArchimedean => "t-archimedean",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Atom> {
        Atom::ALL.into_iter().find(|a| a.keyword() == word)
    }

    /// Decides the atom on `s`.
    pub fn holds(self, s: &OrderedSemigroup) -> bool {
        match self {
            Atom::Simple => is_simple(s, Simplicity::TwoSided),
            Atom::LeftSimple => is_simple(s, Simplicity::Left),
            Atom::TSimple => is_simple(s, Simplicity::T),
            Atom::Regular => regularity::regular_set(s).is_full(),
            Atom::PiRegular => regularity::is_pi_regular(s),
            Atom::IntraPiRegular => regularity::is_intra_pi_regular(s),
            Atom::RightInverse => regularity::is_right_inverse(s),
            Atom::RightPiInverse => regularity::is_right_pi_inverse(s),
            Atom::LeftPiInverse => regularity::is_left_pi_inverse(s),
            Atom::PiInverse => regularity::is_pi_inverse(s),
            Atom::Archimedean => is_archimedean(s, Archimedean::TwoSided),
            Atom::LArchimedean => is_archimedean(s, Archimedean::L),
            Atom::RArchimedean => is_archimedean(s, Archimedean::R),
            Atom::TArchimedean => is_archimedean(s, Archimedean::T),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PropertyExpr {
    Atom(Atom),
    /// Nil-extension of some ideal satisfying the inner expression.
    NilExtOf(Box<PropertyExpr>),
    /// Complete semilattice of subsemigroups satisfying the inner expression.
    CslOf(Box<PropertyExpr>),
    Not(Box<PropertyExpr>),
    And(Box<PropertyExpr>, Box<PropertyExpr>),
    Or(Box<PropertyExpr>, Box<PropertyExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("parse error at position {position}: expected {}", .expected.join(" or "))]
    Syntax { position: usize, expected: Vec<String> },
    #[error("unknown atom `{name}` at position {position}")]
    UnknownAtom { name: String, position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::UnknownAtom { position, .. } => *position,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    LParen,
    RParen,
    Not,
    And,
    Or,
    End,
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '-' || c == '_'
}

/// Tokens paired with their 1-based starting position.
fn lex(text: &str) -> std::result::Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        match c {
            _ if c.is_whitespace() => i += 1,
            '(' => {
                out.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, pos));
                i += 1;
            }
            '!' => {
                out.push((Tok::Not, pos));
                i += 1;
            }
            '&' | '|' => {
                out.push((if c == '&' { Tok::And } else { Tok::Or }, pos));
                i += if chars.get(i + 1) == Some(&c) { 2 } else { 1 };
            }
            _ if is_word_char(c) => {
                let start = i;
                while i < chars.len() && is_word_char(chars[i]) {
                    i += 1;
                }
                out.push((Tok::Word(chars[start..i].iter().collect()), pos));
            }
            _ => {
                return Err(ParseError::Syntax {
                    position: pos,
                    expected: vec!["an atom".into(), "'!'".into(), "'('".into(), "'&'".into(), "'|'".into()],
                })
            }
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

const WRAPPERS: [&str; 2] = ["nil-ext-of", "csl-of"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn syntax<T>(&self, expected: &[&str]) -> std::result::Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expr(&mut self) -> std::result::Result<PropertyExpr, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.at += 1;
            let rhs = self.and()?;
            lhs = PropertyExpr::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> std::result::Result<PropertyExpr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.at += 1;
            let rhs = self.unary()?;
            lhs = PropertyExpr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> std::result::Result<PropertyExpr, ParseError> {
        if *self.peek() == Tok::Not {
            self.at += 1;
            return Ok(PropertyExpr::Not(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn expect_rparen(&mut self) -> std::result::Result<(), ParseError> {
        if *self.peek() != Tok::RParen {
            return self.syntax(&["')'", "'&'", "'|'"]);
        }
        self.at += 1;
        Ok(())
    }

    fn primary(&mut self) -> std::result::Result<PropertyExpr, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::LParen => {
                self.at += 1;
                let e = self.expr()?;
                self.expect_rparen()?;
                Ok(e)
            }
            Tok::Word(w) if WRAPPERS.contains(&w.as_str()) => {
                self.at += 1;
                if *self.peek() != Tok::LParen {
                    return self.syntax(&["'('"]);
                }
                self.at += 1;
                let inner = Box::new(self.expr()?);
                self.expect_rparen()?;
                Ok(if w == "nil-ext-of" {
                    PropertyExpr::NilExtOf(inner)
                } else {
                    PropertyExpr::CslOf(inner)
                })
            }
            Tok::Word(w) => {
                self.at += 1;
                Atom::from_keyword(&w)
                    .map(PropertyExpr::Atom)
                    .ok_or(ParseError::UnknownAtom { name: w, position: pos })
            }
            _ => self.syntax(&["an atom", "'!'", "'('"]),
        }
    }
}

impl PropertyExpr {
    pub fn parse(text: &str) -> std::result::Result<PropertyExpr, ParseError> {
        let mut p = Parser {
            toks: lex(text)?,
            at: 0,
        };
        let e = p.expr()?;
        if *p.peek() != Tok::End {
            return p.syntax(&["'&'", "'|'", "end of input"]);
        }
        Ok(e)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        PropertyExpr::Not(Box::new(self))
    }

    pub fn and(self, other: Self) -> Self {
        PropertyExpr::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Self) -> Self {
        PropertyExpr::Or(Box::new(self), Box::new(other))
    }

    fn contains(&self, pred: &impl Fn(&PropertyExpr) -> bool) -> bool {
        pred(self)
            || match self {
                PropertyExpr::Atom(_) => false,
                PropertyExpr::NilExtOf(e) | PropertyExpr::CslOf(e) | PropertyExpr::Not(e) => e.contains(pred),
                PropertyExpr::And(l, r) | PropertyExpr::Or(l, r) => l.contains(pred) || r.contains(pred),
            }
    }

    fn precedence(&self) -> u8 {
        match self {
            PropertyExpr::Or(..) => 0,
            PropertyExpr::And(..) => 1,
            _ => 2,
        }
    }
}

impl FromStr for PropertyExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        PropertyExpr::parse(s)
    }
}

fn write_wrapped(f: &mut fmt::Formatter<'_>, e: &PropertyExpr, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for PropertyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyExpr::Atom(a) => write!(f, "{a}"),
            PropertyExpr::NilExtOf(e) => write!(f, "nil-ext-of({e})"),
            PropertyExpr::CslOf(e) => write!(f, "csl-of({e})"),
            PropertyExpr::Not(e) => {
                f.write_str("!")?;
                write_wrapped(f, e, e.precedence() < 2)
            }
            PropertyExpr::And(l, r) => {
                write_wrapped(f, l, l.precedence() < 1)?;
                f.write_str(" & ")?;
                write_wrapped(f, r, r.precedence() < 2)
            }
            PropertyExpr::Or(l, r) => {
                write_wrapped(f, l, false)?;
                f.write_str(" | ")?;
                write_wrapped(f, r, r.precedence() < 1)
            }
        }
    }
}

/// Decides `e` on `s`.
///
/// `nil-ext-of(τ)` tries the kernel, then every two-sided ideal, so it needs
/// order ≤ [`IDEAL_SCAN_LIMIT`] unless the kernel already succeeds; `csl-of`
/// scans partitions and needs order ≤ 6. Limits are checked up front.
pub fn evaluate(s: &OrderedSemigroup, e: &PropertyExpr) -> Result<bool> {
    if e.contains(&|x| matches!(x, PropertyExpr::CslOf(_))) {
        all_partitions_allowed(s)?;
    }
    if s.order() > IDEAL_SCAN_LIMIT && e.contains(&|x| matches!(x, PropertyExpr::NilExtOf(_))) {
        return Err(Error::OrderTooLarge {
            order: s.order(),
            limit: IDEAL_SCAN_LIMIT,
            what: "nil-ext-of",
        });
    }
    Ok(eval(s, e))
}

fn all_partitions_allowed(s: &OrderedSemigroup) -> Result<()> {
    let limit = crate::decomposition::PARTITION_SCAN_LIMIT;
    if s.order() > limit {
        return Err(Error::OrderTooLarge {
            order: s.order(),
            limit,
            what: "csl-of",
        });
    }
    Ok(())
}

fn type_of(e: &PropertyExpr) -> TypePredicate<'_> {
    TypePredicate::new(e.to_string(), move |s| eval(s, e))
}

fn eval(s: &OrderedSemigroup, e: &PropertyExpr) -> bool {
    match e {
        PropertyExpr::Atom(a) => a.holds(s),
        PropertyExpr::Not(x) => !eval(s, x),
        PropertyExpr::And(l, r) => eval(s, l) & eval(s, r),
        PropertyExpr::Or(l, r) => eval(s, l) | eval(s, r),
        PropertyExpr::NilExtOf(x) => {
            let tau = type_of(x);
            nil_extension_of_type(s, &tau).is_ok()
                || all_ideals(s, IdealKind::TwoSided)
                    .expect("order checked in evaluate")
                    .iter()
                    .any(|k| {
                        is_nil_extension(s, k).holds && tau.holds(&restrict(s, k).expect("ideals are closed").semigroup)
                    })
        }
        PropertyExpr::CslOf(x) => is_complete_semilattice_of(s, &type_of(x))
            .expect("order checked in evaluate")
            .is_some(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;

    fn p(text: &str) -> PropertyExpr {
        PropertyExpr::parse(text).unwrap()
    }

    #[test]
    fn parses_conjunction() {
        let e = p("right-pi-inverse & !pi-inverse");
        assert_eq!(
            e,
            PropertyExpr::Atom(Atom::RightPiInverse).and(PropertyExpr::Atom(Atom::PiInverse).not())
        );
    }

    #[test]
    fn parses_nested_wrapper() {
        let e = p("nil-ext-of(t-simple & right-pi-inverse)");
        let inner = PropertyExpr::Atom(Atom::TSimple).and(PropertyExpr::Atom(Atom::RightPiInverse));
        assert_eq!(e, PropertyExpr::NilExtOf(Box::new(inner)));
    }

    #[test]
    fn dangling_operator_reports_position() {
        let err = PropertyExpr::parse("right-pi-inverse &&").unwrap_err();
        assert_eq!(err.position(), 20);
        assert!(matches!(err, ParseError::Syntax { .. }));
    }

    #[test]
    fn unknown_atom() {
        let err = PropertyExpr::parse("simple | bogus").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownAtom {
                name: "bogus".into(),
                position: 10
            }
        );
    }

    #[test]
    fn and_binds_tighter() {
        assert_eq!(
            p("simple | regular & pi-regular").to_string(),
            "simple | regular & pi-regular"
        );
        assert!(matches!(p("simple | regular & pi-regular"), PropertyExpr::Or(..)));
        assert_eq!(
            p("(simple | regular) & pi-regular").to_string(),
            "(simple | regular) & pi-regular"
        );
        assert_eq!(
            p("simple & (regular & pi-regular)").to_string(),
            "simple & (regular & pi-regular)"
        );
        assert_eq!(p("!(simple)").to_string(), "!simple");
    }

    #[test]
    fn keyword_table_is_total() {
        for a in Atom::ALL {
            assert_eq!(Atom::from_keyword(a.keyword()), Some(a));
            for (_, s) in all() {
                let _ = a.holds(&s);
            }
        }
        let mut words: Vec<&str> = Atom::ALL.iter().map(|a| a.keyword()).collect();
        words.sort();
        words.dedup();
        assert_eq!(words.len(), Atom::ALL.len());
    }

    #[test]
    fn evaluate_examples() {
        assert!(evaluate(&rz2(), &p("right-pi-inverse & !pi-inverse")).unwrap());
        assert!(evaluate(&n2(), &p("t-archimedean & right-pi-inverse")).unwrap());
        assert!(!evaluate(&lz2(), &p("right-pi-inverse")).unwrap());
        assert!(evaluate(&n2(), &p("nil-ext-of(t-simple & right-pi-inverse)")).unwrap());
        assert!(evaluate(&sl2(), &p("csl-of(nil-ext-of(t-simple & right-pi-inverse))")).unwrap());
        assert!(!evaluate(&lz2(), &p("csl-of(right-pi-inverse)")).unwrap());
    }
}
