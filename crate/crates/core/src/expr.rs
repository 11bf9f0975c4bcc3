//! Constructor expressions such as `johnson(7,2)`, `hadamard(12,paley1)` or
//! `line_graph(named(coxeter))`.
//!
//! ```text
//! expr := name '(' [arg {',' arg}] ')'
//! arg  := expr | integer | word
//! ```
//!
//! Constructors: `complete(n)`, `multipartite(m1,…,mr)`, `cycle(n)`,
//! `johnson(n,k)`, `kneser(n,k)`, `hamming(d,q)`, `paley(q)`,
//! `knn_minus_i(n)`, `hadamard(k[,sylvester|paley1])`, `pg2(q)`,
//! `named(word)`, and the operators `complement(e)`, `line_graph(e)`,
//! `bipartite_double(e)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::families::{self, FamilyError, HadamardMatrix, HadamardMethod, PartitionSpec};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("unknown constructor `{0}`")]
    Unknown(String),
    #[error("{name}: {msg}")]
    Arguments { name: String, msg: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Int(usize),
    Word(String),
    Expr(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub name: String,
    pub args: Vec<Arg>,
}

const CONSTRUCTORS: &[&str] = &[
    "complete",
    "multipartite",
    "cycle",
    "johnson",
    "kneser",
    "hamming",
    "paley",
    "knn_minus_i",
    "hadamard",
    "pg2",
    "named",
    "complement",
    "line_graph",
    "bipartite_double",
];

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { col: self.pos + 1, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }


    fn token(&mut self) -> Result<&str, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || b"_-".contains(&self.src[self.pos])) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a name or number");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let col = self.pos;
        let name = self.token()?.to_ascii_lowercase();
        if !CONSTRUCTORS.contains(&name.as_str()) {
            return Err(ExprError::Unknown(name));
        }
        if self.peek() != Some(b'(') {
            self.pos = col;
            return self.err(format!("`{name}` needs an argument list"));
        }
        self.pos += 1;
        let mut args = Vec::new();
        if self.peek() == Some(b')') {
            self.pos += 1;
            return Ok(Expr { name, args });
        }
        loop {
            args.push(self.arg()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    return Ok(Expr { name, args });
                }
                _ => return self.err("expected `,` or `)`"),
            }
        }
    }

    fn arg(&mut self) -> Result<Arg, ExprError> {
        let save = self.pos;
        let tok = self.token()?.to_string();
        if self.peek() == Some(b'(') {
            self.pos = save;
            return Ok(Arg::Expr(self.expr()?));
        }
        if tok.bytes().all(|b| b.is_ascii_digit()) {
            return tok.parse().map(Arg::Int).or_else(|_| self.err("integer too large"));
        }
        Ok(Arg::Word(tok))
    }
}

impl FromStr for Expr {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Int(i) => write!(f, "{i}"),
            Arg::Word(w) => write!(f, "{w}"),
            Arg::Expr(e) => write!(f, "{e}"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl Expr {
    fn arg_err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Arguments { name: self.name.clone(), msg: msg.into() })
    }

    fn ints(&self, count: usize) -> Result<Vec<usize>, ExprError> {
        if self.args.len() != count {
            return self.arg_err(format!("expected {count} integer argument(s), got {}", self.args.len()));
        }
        self.args
            .iter()
            .map(|a| match a {
                Arg::Int(i) => Ok(*i),
                other => self.arg_err(format!("`{other}` is not an integer")),
            })
            .collect()
    }

    fn inner(&self) -> Result<Graph, ExprError> {
        match self.args.as_slice() {
            [Arg::Expr(e)] => e.build(),
            _ => self.arg_err("expected one graph expression"),
        }
    }

    pub fn build(&self) -> Result<Graph, ExprError> {
        let g = match self.name.as_str() {
            "complete" => families::complete(self.ints(1)?[0])?,
            "multipartite" => {
                let parts = self.ints(self.args.len())?;
                families::complete_multipartite(&PartitionSpec::new(parts)?)?
            }
            "cycle" => families::cycle(self.ints(1)?[0])?,
            "johnson" => {
                let a = self.ints(2)?;
                families::johnson(a[0], a[1])?
            }
            "kneser" => {
                let a = self.ints(2)?;
                families::kneser(a[0], a[1])?
            }
            "hamming" => {
                let a = self.ints(2)?;
                families::hamming(a[0], a[1])?
            }
            "paley" => families::paley(self.ints(1)?[0])?,
            "knn_minus_i" => families::knn_minus_i(self.ints(1)?[0])?,
            "pg2" => families::pg2_incidence(self.ints(1)?[0])?,
            "hadamard" => {
                let (k, method) = match self.args.as_slice() {
                    [Arg::Int(k)] if k.is_power_of_two() => (*k, HadamardMethod::Sylvester),
                    [Arg::Int(k)] => (*k, HadamardMethod::Paley1),
                    [Arg::Int(k), Arg::Word(m)] => (*k, m.parse()?),
                    _ => return self.arg_err("expected (order) or (order, sylvester|paley1)"),
                };
                families::hadamard_graph(&HadamardMatrix::construct(k, method)?)?
            }
            "named" => match self.args.as_slice() {
                [Arg::Word(w)] => families::named(w)?,
                _ => return self.arg_err("expected one graph name"),
            },
            "complement" => self.inner()?.complement(),
            "line_graph" => self.inner()?.line_graph()?,
            "bipartite_double" => self.inner()?.bipartite_double(),
            other => return Err(ExprError::Unknown(other.to_string())),
        };
        Ok(g)
    }
}

/// Parses and builds in one step.
pub fn build(text: &str) -> Result<Graph, ExprError> {
    text.parse::<Expr>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let e: Expr = " line_graph( named(coxeter) ) ".parse().unwrap();
        assert_eq!(e.to_string(), "line_graph(named(coxeter))");
        assert_eq!("hadamard(12,paley1)".parse::<Expr>().unwrap().args, vec![Arg::Int(12), Arg::Word("paley1".into())]);
    }

    #[test]
    fn builds() {
        assert_eq!(build("kneser(5,2)").unwrap(), families::kneser(5, 2).unwrap());
        assert_eq!(build("complement(johnson(5,2))").unwrap(), families::kneser(5, 2).unwrap());
        assert_eq!(build("hamming(3,3)").unwrap().n(), 27);
        assert_eq!(build("multipartite(2,2,2)").unwrap().valency(), Some(4));
        assert_eq!(build("bipartite_double(kneser(5,2))").unwrap().n(), 20);
        assert_eq!(build("hadamard(12)").unwrap().n(), 48);
        assert_eq!(build("line_graph(pg2(2))").unwrap().n(), 21);
    }

    #[test]
    fn errors() {
        assert!(matches!(build("paley(12)"), Err(ExprError::Family(_))));
        assert!(matches!(build("petersen(3)"), Err(ExprError::Unknown(_))));
        assert!(matches!(build("johnson(5)"), Err(ExprError::Arguments { .. })));
        assert!(matches!(build("johnson(5,2"), Err(ExprError::Syntax { .. })));
        assert!(matches!(build("cycle(5) x"), Err(ExprError::Syntax { .. })));
        assert!(matches!(build("cycle"), Err(ExprError::Syntax { .. })));
        assert!(matches!(build("named(nonesuch)"), Err(ExprError::Family(FamilyError::UnknownNamed(_)))));
        assert!(matches!(build("complement(5)"), Err(ExprError::Arguments { .. })));
    }
}
