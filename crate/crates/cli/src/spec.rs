//! The algebra-spec text format: builtin constructors and an explicit
//! bound-quiver grammar.
//!
//! Builtins:
//!
//! ```text
//! nakayama <n> <t>                  cyclic quiver, n vertices, paths of length t vanish
//! linear_an <n>                     equioriented line with n vertices, no relations
//! t2_of (<spec>)                    lower-triangular 2x2 matrices over the inner algebra
//! auslander_of (<spec>)             endomorphism algebra of the sum of all indecomposables
//! stable_auslander_of (<spec>)      the same modulo maps factoring through projectives
//! ```
//!
//! Explicit bound quivers:
//!
//! ```text
//! vertices: a b c; arrows: x:a->b y:b->c; relations: x*y;
//! ```
//!
//! `*` concatenates arrows left to right (`x*y` walks `x` first), `+`/`-`
//! combine paths linearly, and an integer literal in front of a path
//! scales it. The `relations:` block may be empty or omitted entirely.
//! Parse errors carry one-based line and column numbers.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use arknit::fdalg::{
    compile_bound_quiver, linear_an, nakayama, t2_algebra, Algebra, Arrow, QuiverPresentation,
};
use arknit::knit::KnitBounds;
use arknit::morphcat::{auslander_algebra, MorphError};
use arknit::Scalar;

/// A parsed algebra description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSpec {
    Nakayama(usize, usize),
    LinearAn(usize),
    T2Of(Box<AlgebraSpec>),
    AuslanderOf(Box<AlgebraSpec>),
    StableAuslanderOf(Box<AlgebraSpec>),
    Quiver(QuiverSpec),
}

/// An explicit bound quiver, still in terms of names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    /// `(name, source, target)` by vertex name.
    pub arrows: Vec<(String, String, String)>,
    /// Each relation is a linear combination of arrow-name paths.
    pub relations: Vec<Vec<(i64, Vec<String>)>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("spec parse error at {line}:{col}: {msg}")]
pub struct SpecError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error(transparent)]
    Parse(#[from] SpecError),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("the base algebra is not representation-finite within the bounds, so its Auslander algebra cannot be assembled")]
    BaseNotFinite,
    #[error("the stable Auslander algebra is the zero ring (the base is semisimple)")]
    StableZero,
    #[error("quiver compilation failed: {0}")]
    Compile(String),
    #[error("{0}")]
    Undecided(String),
}

// ---------------------------------------------------------------- tokens

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Colon,
    Semi,
    Comma,
    Star,
    Plus,
    Minus,
    ArrowTo,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(s) => write!(f, "integer `{s}`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::ArrowTo => write!(f, "`->`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
        }
    }
}

struct Lexed {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(input: &str) -> Result<Vec<Lexed>, SpecError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump(&mut chars);
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump(&mut chars);
                }
            }
            ':' => {
                bump(&mut chars);
                out.push(Lexed { tok: Tok::Colon, line: tl, col: tc });
            }
            ';' => {
                bump(&mut chars);
                out.push(Lexed { tok: Tok::Semi, line: tl, col: tc });
            }
            ',' => {
                bump(&mut chars);
                out.push(Lexed { tok: Tok::Comma, line: tl, col: tc });
            }
            '*' => {
                bump(&mut chars);
                out.push(Lexed { tok: Tok::Star, line: tl, col: tc });
            }
            '+' => {
                bump(&mut chars);
                out.push(Lexed { tok: Tok::Plus, line: tl, col: tc });
            }
            '(' => {
                bump(&mut chars);
                out.push(Lexed { tok: Tok::LParen, line: tl, col: tc });
            }
            ')' => {
                bump(&mut chars);
                out.push(Lexed { tok: Tok::RParen, line: tl, col: tc });
            }
            '-' => {
                bump(&mut chars);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars);
                    out.push(Lexed { tok: Tok::ArrowTo, line: tl, col: tc });
                } else {
                    out.push(Lexed { tok: Tok::Minus, line: tl, col: tc });
                }
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        s.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                out.push(Lexed { tok: Tok::Int(s), line: tl, col: tc });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                out.push(Lexed { tok: Tok::Ident(s), line: tl, col: tc });
            }
            other => {
                return Err(SpecError {
                    line: tl,
                    col: tc,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- parser

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|l| (l.line, l.col))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SpecError> {
        let (line, col) = self.here();
        Err(SpecError { line, col, msg: msg.into() })
    }

    fn next(&mut self, what: &str) -> Result<Tok, SpecError> {
        match self.toks.get(self.pos) {
            Some(l) => {
                self.pos += 1;
                Ok(l.tok.clone())
            }
            None => self.err(format!("expected {what}, found end of input")),
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), SpecError> {
        match self.peek() {
            Some(found) if *found == t => {
                self.pos += 1;
                Ok(())
            }
            Some(found) => {
                let found = found.clone();
                self.err(format!("expected {t}, found {found}"))
            }
            None => self.err(format!("expected {t}, found end of input")),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, SpecError> {
        match self.next(what)? {
            Tok::Ident(s) => Ok(s),
            other => {
                self.pos -= 1;
                self.err(format!("expected {what}, found {other}"))
            }
        }
    }

    fn integer(&mut self, what: &str) -> Result<usize, SpecError> {
        match self.next(what)? {
            Tok::Int(s) => s.parse().map_err(|_| SpecError {
                line: self.toks[self.pos - 1].line,
                col: self.toks[self.pos - 1].col,
                msg: format!("integer `{s}` out of range"),
            }),
            other => {
                self.pos -= 1;
                self.err(format!("expected {what}, found {other}"))
            }
        }
    }

    fn spec(&mut self) -> Result<AlgebraSpec, SpecError> {
        let head = self.ident("a builtin name or `vertices`")?;
        match head.as_str() {
            "nakayama" => {
                let n = self.integer("the number of vertices")?;
                let t = self.integer("the nilpotency bound")?;
                Ok(AlgebraSpec::Nakayama(n, t))
            }
            "linear_an" => {
                let n = self.integer("the number of vertices")?;
                Ok(AlgebraSpec::LinearAn(n))
            }
            "t2_of" => Ok(AlgebraSpec::T2Of(Box::new(self.parenthesized()?))),
            "auslander_of" => Ok(AlgebraSpec::AuslanderOf(Box::new(self.parenthesized()?))),
            "stable_auslander_of" => {
                Ok(AlgebraSpec::StableAuslanderOf(Box::new(self.parenthesized()?)))
            }
            "vertices" => self.quiver(),
            other => {
                self.pos -= 1;
                self.err(format!(
                    "unknown spec head `{other}` (expected nakayama, linear_an, t2_of, \
                     auslander_of, stable_auslander_of, or vertices)"
                ))
            }
        }
    }

    fn parenthesized(&mut self) -> Result<AlgebraSpec, SpecError> {
        self.expect(Tok::LParen)?;
        let inner = self.spec()?;
        self.expect(Tok::RParen)?;
        Ok(inner)
    }

    fn quiver(&mut self) -> Result<AlgebraSpec, SpecError> {
        // `vertices` has been consumed.
        self.expect(Tok::Colon)?;
        let mut vertices = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            vertices.push(self.ident("a vertex name")?);
        }
        if vertices.is_empty() {
            return self.err("expected at least one vertex name");
        }
        self.expect(Tok::Semi)?;

        let kw = self.ident("`arrows`")?;
        if kw != "arrows" {
            self.pos -= 1;
            return self.err(format!("expected `arrows`, found `{kw}`"));
        }
        self.expect(Tok::Colon)?;
        let mut arrows = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            let name = self.ident("an arrow name")?;
            self.expect(Tok::Colon)?;
            let src = self.ident("the source vertex")?;
            self.expect(Tok::ArrowTo)?;
            let dst = self.ident("the target vertex")?;
            arrows.push((name, src, dst));
        }
        self.expect(Tok::Semi)?;

        let mut relations = Vec::new();
        if let Some(Tok::Ident(kw)) = self.peek() {
            if kw == "relations" {
                self.pos += 1;
                self.expect(Tok::Colon)?;
                if self.peek() != Some(&Tok::Semi) {
                    relations.push(self.relation()?);
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        relations.push(self.relation()?);
                    }
                }
                self.expect(Tok::Semi)?;
            }
        }
        Ok(AlgebraSpec::Quiver(QuiverSpec { vertices, arrows, relations }))
    }

    /// `term (('+'|'-') term)*` where `term := (int '*')? path`.
    fn relation(&mut self) -> Result<Vec<(i64, Vec<String>)>, SpecError> {
        let mut terms = Vec::new();
        let mut sign = 1i64;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            sign = -1;
        }
        terms.push(self.term(sign)?);
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    terms.push(self.term(1)?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    terms.push(self.term(-1)?);
                }
                _ => break,
            }
        }
        Ok(terms)
    }

    fn term(&mut self, sign: i64) -> Result<(i64, Vec<String>), SpecError> {
        let mut coeff = sign;
        if let Some(Tok::Int(_)) = self.peek() {
            let c = self.integer("a coefficient")? as i64;
            coeff *= c;
            self.expect(Tok::Star)?;
        }
        let mut path = vec![self.ident("an arrow name")?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            path.push(self.ident("an arrow name")?);
        }
        Ok((coeff, path))
    }
}

/// Parse a spec string. Trailing garbage is an error.
pub fn parse_spec(input: &str) -> Result<AlgebraSpec, SpecError> {
    let toks = lex(input)?;
    let end_line = input.lines().count().max(1);
    let end_col = input.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
    let mut p = Parser { toks, pos: 0, end_line, end_col };
    let spec = p.spec()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input after a complete spec");
    }
    Ok(spec)
}

// ---------------------------------------------------------------- builder

/// Name-resolve an explicit quiver into a compilable presentation.
fn resolve_quiver(q: &QuiverSpec) -> Result<QuiverPresentation, BuildError> {
    let vi = |name: &str| -> Result<usize, BuildError> {
        q.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| BuildError::Params(format!("unknown vertex `{name}`")))
    };
    for (i, v) in q.vertices.iter().enumerate() {
        if q.vertices[..i].contains(v) {
            return Err(BuildError::Params(format!("duplicate vertex `{v}`")));
        }
    }
    let mut arrows = Vec::with_capacity(q.arrows.len());
    for (name, s, t) in &q.arrows {
        if q.vertices.contains(name) || arrows.iter().any(|a: &Arrow| &a.name == name) {
            return Err(BuildError::Params(format!("duplicate name `{name}`")));
        }
        arrows.push(Arrow { name: name.clone(), source: vi(s)?, target: vi(t)? });
    }
    let ai = |name: &str| -> Result<usize, BuildError> {
        arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| BuildError::Params(format!("unknown arrow `{name}`")))
    };
    let mut relations = Vec::with_capacity(q.relations.len());
    let mut max_len = 2usize;
    for rel in &q.relations {
        let mut terms = Vec::with_capacity(rel.len());
        for (coeff, path) in rel {
            let idx: Vec<usize> = path.iter().map(|n| ai(n)).collect::<Result<_, _>>()?;
            for w in idx.windows(2) {
                if arrows[w[0]].target != arrows[w[1]].source {
                    return Err(BuildError::Params(format!(
                        "path `{}` breaks: `{}` ends at `{}` but `{}` starts at `{}`",
                        path.join("*"),
                        arrows[w[0]].name,
                        q.vertices[arrows[w[0]].target],
                        arrows[w[1]].name,
                        q.vertices[arrows[w[1]].source],
                    )));
                }
            }
            max_len = max_len.max(idx.len());
            terms.push((Scalar::from_int(*coeff), idx));
        }
        relations.push(terms);
    }
    Ok(QuiverPresentation {
        vertices: q.vertices.clone(),
        arrows,
        relations,
        // Rewriting needs room beyond the longest relation to confirm
        // every basis path is irreducible.
        path_cap: max_len + 2,
    })
}

/// Build the algebra a spec describes. Auslander-style builtins knit the
/// inner algebra first, which is where `bounds` matters.
pub fn build_algebra(spec: &AlgebraSpec, bounds: &KnitBounds) -> Result<Arc<Algebra>, BuildError> {
    match spec {
        AlgebraSpec::Nakayama(n, t) => {
            if *n < 1 || *t < 2 {
                return Err(BuildError::Params(format!(
                    "nakayama needs n >= 1 and t >= 2, got n = {n}, t = {t}"
                )));
            }
            Ok(nakayama(*n, *t))
        }
        AlgebraSpec::LinearAn(n) => {
            if *n < 1 {
                return Err(BuildError::Params("linear_an needs n >= 1".into()));
            }
            Ok(linear_an(*n))
        }
        AlgebraSpec::T2Of(inner) => Ok(t2_algebra(&build_algebra(inner, bounds)?)),
        AlgebraSpec::AuslanderOf(inner) => {
            let base = build_algebra(inner, bounds)?;
            let data = auslander_algebra(&base, bounds).map_err(translate_morph)?;
            Ok(data.algebra)
        }
        AlgebraSpec::StableAuslanderOf(inner) => {
            let base = build_algebra(inner, bounds)?;
            let data = auslander_algebra(&base, bounds).map_err(translate_morph)?;
            match &data.gamma {
                Some(q) => Ok(q.algebra.clone()),
                None => Err(BuildError::StableZero),
            }
        }
        AlgebraSpec::Quiver(q) => {
            let qp = resolve_quiver(q)?;
            compile_bound_quiver(&qp).map_err(|e| BuildError::Compile(e.to_string()))
        }
    }
}

fn translate_morph(e: MorphError) -> BuildError {
    match e {
        MorphError::NotFinite => BuildError::BaseNotFinite,
        other => BuildError::Undecided(other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds() -> KnitBounds {
        KnitBounds::default()
    }

    #[test]
    fn builtins_parse_and_build() {
        assert_eq!(parse_spec("nakayama 2 3").unwrap(), AlgebraSpec::Nakayama(2, 3));
        assert_eq!(parse_spec(" linear_an  4 ").unwrap(), AlgebraSpec::LinearAn(4));
        let nested = parse_spec("t2_of (nakayama 1 2)").unwrap();
        assert_eq!(
            nested,
            AlgebraSpec::T2Of(Box::new(AlgebraSpec::Nakayama(1, 2)))
        );
        // Upper-triangular 2x2 matrices over a 2-dimensional algebra.
        assert_eq!(build_algebra(&nested, &bounds()).unwrap().dim(), 6);
        let gamma = parse_spec("stable_auslander_of (nakayama 1 3)").unwrap();
        assert_eq!(build_algebra(&gamma, &bounds()).unwrap().dim(), 4);
    }

    #[test]
    fn quiver_grammar_round_trips() {
        let s = "vertices: a b c; arrows: x:a->b y:b->c; relations: x*y;";
        let alg = build_algebra(&parse_spec(s).unwrap(), &bounds()).unwrap();
        // Basis: three idempotents and the two arrows; x*y is killed.
        assert_eq!(alg.dim(), 5);
        // Commutativity-style relation with signs and coefficients.
        let s2 = "vertices: p q; arrows: u:p->q v:p->q; relations: u - 1*v;";
        let alg2 = build_algebra(&parse_spec(s2).unwrap(), &bounds()).unwrap();
        assert_eq!(alg2.dim(), 3);
        // No relations block at all.
        let s3 = "vertices: p q; arrows: u:p->q;";
        assert_eq!(build_algebra(&parse_spec(s3).unwrap(), &bounds()).unwrap().dim(), 3);
        // Empty relations block.
        let s4 = "vertices: p q; arrows: u:p->q; relations: ;";
        assert_eq!(build_algebra(&parse_spec(s4).unwrap(), &bounds()).unwrap().dim(), 3);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_spec("nakayama x 2").unwrap_err();
        assert_eq!((e.line, e.col), (1, 10));
        let e = parse_spec("vertices: a;\narrows f:a->b;").unwrap_err();
        assert_eq!(e.line, 2, "{e}");
        let e = parse_spec("nakayama 1 2 extra").unwrap_err();
        assert!(e.msg.contains("trailing"), "{e}");
        let e = parse_spec("mystery 3").unwrap_err();
        assert!(e.msg.contains("unknown spec head"), "{e}");
        let e = parse_spec("").unwrap_err();
        assert!(e.msg.contains("end of input"), "{e}");
    }

    #[test]
    fn build_errors_are_specific() {
        let e = build_algebra(&parse_spec("nakayama 0 2").unwrap(), &bounds()).unwrap_err();
        assert!(matches!(e, BuildError::Params(_)));
        // Unknown vertex in an arrow.
        let e = build_algebra(
            &parse_spec("vertices: a; arrows: f:a->z;").unwrap(),
            &bounds(),
        )
        .unwrap_err();
        assert!(e.to_string().contains("unknown vertex"), "{e}");
        // Non-composable relation path.
        let e = build_algebra(
            &parse_spec("vertices: a b; arrows: f:a->b g:a->b; relations: f*g;").unwrap(),
            &bounds(),
        )
        .unwrap_err();
        assert!(e.to_string().contains("breaks"), "{e}");
        // Semisimple base has a zero stable quotient.
        let e = build_algebra(
            &parse_spec("stable_auslander_of (vertices: a; arrows: ;)").unwrap(),
            &bounds(),
        )
        .unwrap_err();
        assert!(matches!(e, BuildError::StableZero));
    }
}
