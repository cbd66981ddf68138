//! Recursive-descent parser for the concrete formula syntax.
//!
//! ```text
//! formula  := iff ;
//! iff      := impl ( "<->" impl )* ;
//! impl     := or ( "->" impl )? ;
//! or       := and ( "|" and )* ;
//! and      := unary ( "&" unary )* ;
//! unary    := "~" unary | quant | atom | "(" formula ")" ;
//! quant    := ("all"|"ex") IDENT ( ":" ("PT"|"Set") )? "." formula ;
//! atom     := term ("="|"in"|"<:") term | "Set" "(" term ")" | macro ;
//! macro    := NAME "(" term ("," term)* ")"
//!           | NAME "[" IDENT ":" formula "]" "(" term ")" ;
//! term     := IDENT | "'" IDENT "'"
//! ```

use std::fmt;

use thiserror::Error;

use super::ast::{Formula, MacroApp, MacroName, Predicate, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: unknown macro `{name}`")]
    UnknownMacro {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("{line}:{column}: macro `{name}` {detail}")]
    Arity {
        line: usize,
        column: usize,
        name: String,
        detail: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Quoted(String),
    All,
    Ex,
    In,
    Not,
    And,
    Or,
    Arrow,
    DoubleArrow,
    Eq,
    PartOf,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Colon,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Quoted(s) => write!(f, "constant `'{s}'`"),
            Tok::All => f.write_str("`all`"),
            Tok::Ex => f.write_str("`ex`"),
            Tok::In => f.write_str("`in`"),
            Tok::Not => f.write_str("`~`"),
            Tok::And => f.write_str("`&`"),
            Tok::Or => f.write_str("`|`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::DoubleArrow => f.write_str("`<->`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::PartOf => f.write_str("`<:`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0usize, 1usize, 1usize);
    let syntax = |line, column, expected: &[&str], found: String| ParseError::Syntax {
        line,
        column,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found,
    };
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let (start_line, start_col) = (line, column);
        let rest = &chars[i..];
        let (tok, width) = if rest.starts_with(&['<', '-', '>']) {
            (Tok::DoubleArrow, 3)
        } else if rest.starts_with(&['-', '>']) {
            (Tok::Arrow, 2)
        } else if rest.starts_with(&['<', ':']) {
            (Tok::PartOf, 2)
        } else if is_ident_start(c) {
            let len = rest.iter().take_while(|c| is_ident_continue(**c)).count();
            let word: String = rest[..len].iter().collect();
            let tok = match word.as_str() {
                "all" => Tok::All,
                "ex" => Tok::Ex,
                "in" => Tok::In,
                _ => Tok::Ident(word),
            };
            (tok, len)
        } else if c == '\'' {
            let len = rest[1..]
                .iter()
                .take_while(|c| is_ident_continue(**c))
                .count();
            let word: String = rest[1..1 + len].iter().collect();
            if len == 0 || !is_ident_start(rest[1]) {
                return Err(syntax(
                    start_line,
                    start_col + 1,
                    &["identifier"],
                    rest.get(1).map_or("end of input".into(), |c| format!("`{c}`")),
                ));
            }
            if rest.get(1 + len) != Some(&'\'') {
                return Err(syntax(
                    start_line,
                    start_col + 1 + len,
                    &["`'`"],
                    rest.get(1 + len)
                        .map_or("end of input".into(), |c| format!("`{c}`")),
                ));
            }
            (Tok::Quoted(word), len + 2)
        } else {
            let tok = match c {
                '~' => Tok::Not,
                '&' => Tok::And,
                '|' => Tok::Or,
                '=' => Tok::Eq,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                ':' => Tok::Colon,
                other => {
                    return Err(syntax(
                        start_line,
                        start_col,
                        &["token"],
                        format!("character `{other}`"),
                    ))
                }
            };
            (tok, 1)
        };
        out.push(Spanned {
            tok,
            line: start_line,
            column: start_col,
        });
        i += width;
        column += width;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn here(&self) -> (usize, usize) {
        let s = &self.toks[self.pos];
        (s.line, s.column)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (line, column) = self.here();
        ParseError::Syntax {
            line,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&tok.to_string()]))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while *self.peek() == Tok::DoubleArrow {
            self.bump();
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::All | Tok::Ex => self.quantifier(),
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(_) | Tok::Quoted(_) => self.atom(),
            _ => Err(self.error(&["`~`", "`all`", "`ex`", "`(`", "term", "macro"])),
        }
    }

    fn quantifier(&mut self) -> Result<Formula, ParseError> {
        let universal = self.bump() == Tok::All;
        let var = self.ident()?;
        let sort = if *self.peek() == Tok::Colon {
            self.bump();
            match self.peek() {
                Tok::Ident(s) if s == "PT" || s == "Set" => Some(self.ident()?),
                _ => return Err(self.error(&["`PT`", "`Set`"])),
            }
        } else {
            None
        };
        self.expect(Tok::Dot)?;
        let body = self.formula()?;
        Ok(match (universal, sort.as_deref()) {
            (true, None) => Formula::forall(&var, body),
            (false, None) => Formula::exists(&var, body),
            (true, Some("PT")) => Formula::forall_pt(&var, body),
            (false, Some("PT")) => Formula::exists_pt(&var, body),
            (true, Some(_)) => Formula::forall_set(&var, body),
            (false, Some(_)) => Formula::exists_set(&var, body),
        })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(Term::Var(s))
            }
            Tok::Quoted(s) => {
                self.bump();
                Ok(Term::Const(s))
            }
            _ => Err(self.error(&["term"])),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        if let Tok::Ident(name) = self.peek().clone() {
            if matches!(self.peek_at(1), Tok::LParen | Tok::LBracket) {
                if name == "Set" && *self.peek_at(1) == Tok::LParen {
                    self.bump();
                    self.bump();
                    let t = self.term()?;
                    self.expect(Tok::RParen)?;
                    return Ok(Formula::SetPred(t));
                }
                return self.macro_call(name);
            }
        }
        let lhs = self.term()?;
        let op = self.peek().clone();
        match op {
            Tok::Eq | Tok::In | Tok::PartOf => {
                self.bump();
            }
            _ => return Err(self.error(&["`=`", "`in`", "`<:`"])),
        }
        let rhs = self.term()?;
        Ok(match op {
            Tok::Eq => Formula::Equal(lhs, rhs),
            Tok::In => Formula::Member(lhs, rhs),
            _ => Formula::Part(lhs, rhs),
        })
    }

    fn macro_call(&mut self, name: String) -> Result<Formula, ParseError> {
        let (line, column) = self.here();
        self.bump();
        let Ok(kind) = name.parse::<MacroName>() else {
            return Err(ParseError::UnknownMacro { line, column, name });
        };
        let arity_err = |detail: String| ParseError::Arity {
            line,
            column,
            name: name.clone(),
            detail,
        };
        let predicate = if *self.peek() == Tok::LBracket {
            if !kind.takes_formula() {
                return Err(arity_err("takes no formula parameter".into()));
            }
            self.bump();
            let binder = self.ident()?;
            self.expect(Tok::Colon)?;
            let body = self.formula()?;
            self.expect(Tok::RBracket)?;
            Some(Predicate::new(&binder, body))
        } else {
            if kind.takes_formula() {
                return Err(arity_err("requires a formula parameter `[x: ...]`".into()));
            }
            None
        };
        self.expect(Tok::LParen)?;
        let mut args = vec![self.term()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.term()?);
        }
        self.expect(Tok::RParen)?;
        if args.len() != kind.arity() {
            return Err(arity_err(format!(
                "expects {} argument(s), got {}",
                kind.arity(),
                args.len()
            )));
        }
        Ok(Formula::Macro(MacroApp {
            name: kind,
            args,
            predicate,
        }))
    }
}

/// Parses a formula from its concrete syntax.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let f = p.formula()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["end of input", "binary connective"]));
    }
    Ok(f)
}

/// Parses a predicate parameter written as `b: φ`.
pub fn parse_predicate(text: &str) -> Result<Predicate, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let binder = p.ident()?;
    p.expect(Tok::Colon)?;
    let body = p.formula()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["end of input", "binary connective"]));
    }
    Ok(Predicate::new(&binder, body))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Term {
        Term::var(s)
    }

    #[test]
    fn reflexivity_shape() {
        let f = parse("all a. a <: a").unwrap();
        assert_eq!(f, Formula::forall("a", Formula::Part(v("a"), v("a"))));
    }

    #[test]
    fn cant_macro() {
        let f = parse("Cant(a)").unwrap();
        assert_eq!(f, Formula::macro_app(MacroName::Cant, vec![v("a")]));
    }

    #[test]
    fn free_variable_bookkeeping() {
        let f = parse("all x. (x in y)").unwrap();
        assert_eq!(f.free_vars().into_iter().collect::<Vec<_>>(), vec!["y"]);
    }

    #[test]
    fn precedence_and_associativity() {
        let f = parse("a <: b & b <: g -> a <: g").unwrap();
        assert_eq!(
            f,
            Formula::implies(
                Formula::and(Formula::Part(v("a"), v("b")), Formula::Part(v("b"), v("g"))),
                Formula::Part(v("a"), v("g"))
            )
        );
        let imp = parse("x = x -> y = y -> z = z").unwrap();
        assert!(matches!(&imp, Formula::Implies(_, r) if matches!(**r, Formula::Implies(..))));
        let iff = parse("x = x <-> y = y <-> z = z").unwrap();
        assert!(matches!(&iff, Formula::Iff(l, _) if matches!(**l, Formula::Iff(..))));
        let mixed = parse("~ (a = b) | c = d").unwrap();
        assert_eq!(
            mixed,
            Formula::or(
                Formula::not(Formula::Equal(v("a"), v("b"))),
                Formula::Equal(v("c"), v("d"))
            )
        );
    }

    #[test]
    fn quantifier_scope_extends_right() {
        let f = parse("all x. x = x & y = y").unwrap();
        assert!(matches!(f, Formula::ForAll(_, ref b) if matches!(**b, Formula::And(..))));
    }

    #[test]
    fn sorted_quantifiers_desugar() {
        assert_eq!(
            parse("all a:PT. a <: a").unwrap(),
            parse("all a. (T(a) -> a <: a)").unwrap()
        );
        assert_eq!(
            parse("ex t:Set. t = t").unwrap(),
            parse("ex t. (Set(t) & t = t)").unwrap()
        );
    }

    #[test]
    fn constants_and_comments() {
        let f = parse("# header\n'alpha' <: 'alpha' # trailing").unwrap();
        assert_eq!(f, Formula::Part(Term::constant("alpha"), Term::constant("alpha")));
    }

    #[test]
    fn predicate_macro() {
        let f = parse("CantF[b: b <: g](a)").unwrap();
        let names: Vec<_> = f.free_vars().into_iter().collect();
        assert_eq!(names, vec!["a", "g"]);
    }

    #[test]
    fn errors() {
        match parse("all x x = x") {
            Err(ParseError::Syntax {
                line,
                column,
                expected,
                ..
            }) => {
                assert_eq!((line, column), (1, 7));
                assert!(expected.iter().any(|e| e.contains('.')));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("Foo(a)"), Err(ParseError::UnknownMacro { .. })));
        assert!(matches!(parse("Disj(a)"), Err(ParseError::Arity { .. })));
        assert!(matches!(parse("CantF(a)"), Err(ParseError::Arity { .. })));
        assert!(matches!(parse("Cant[b: b = b](a)"), Err(ParseError::Arity { .. })));
        match parse("a = b &\n  ") {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse("a = b c").is_err());
        assert!(parse("'' = a").is_err());
    }
}
