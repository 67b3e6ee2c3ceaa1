//! Residue-class schemas: vertex maps given piecewise by `i mod k`.
//!
//! Each named schema is stored as a table of index expressions such as
//! `B_{(i-1)d+2}`, parsed once and evaluated modulo `n`. Every entry is affine
//! in `i`, so it reduces to `X_i -> Y_{w i + o}` on its residue class.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PropellerParams, VertexClass};
use crate::perm::{unhit, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SchemaName {
    Rho,
    Mu,
    Sigma1,
    Sigma1Star,
    Sigma2,
    Sigma3,
    Sigma4,
    Alpha,
    Beta1,
    Beta2,
    Beta3,
    Beta4,
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma4,
    Gamma5,
    Gamma6,
    Delta,
}

impl SchemaName {
    pub const ALL: [SchemaName; 19] = [
        SchemaName::Rho,
        SchemaName::Mu,
        SchemaName::Sigma1,
        SchemaName::Sigma1Star,
        SchemaName::Sigma2,
        SchemaName::Sigma3,
        SchemaName::Sigma4,
        SchemaName::Alpha,
        SchemaName::Beta1,
        SchemaName::Beta2,
        SchemaName::Beta3,
        SchemaName::Beta4,
        SchemaName::Gamma1,
        SchemaName::Gamma2,
        SchemaName::Gamma3,
        SchemaName::Gamma4,
        SchemaName::Gamma5,
        SchemaName::Gamma6,
        SchemaName::Delta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SchemaName::Rho => "Rho",
            SchemaName::Mu => "Mu",
            SchemaName::Sigma1 => "Sigma1",
            SchemaName::Sigma1Star => "Sigma1Star",
            SchemaName::Sigma2 => "Sigma2",
            SchemaName::Sigma3 => "Sigma3",
            SchemaName::Sigma4 => "Sigma4",
            SchemaName::Alpha => "Alpha",
            SchemaName::Beta1 => "Beta1",
            SchemaName::Beta2 => "Beta2",
            SchemaName::Beta3 => "Beta3",
            SchemaName::Beta4 => "Beta4",
            SchemaName::Gamma1 => "Gamma1",
            SchemaName::Gamma2 => "Gamma2",
            SchemaName::Gamma3 => "Gamma3",
            SchemaName::Gamma4 => "Gamma4",
            SchemaName::Gamma5 => "Gamma5",
            SchemaName::Gamma6 => "Gamma6",
            SchemaName::Delta => "Delta",
        }
    }

    /// The helper symbol the schema needs, if any.
    pub fn helper(self) -> Option<char> {
        match self.template().helper {
            Helper::None => None,
            Helper::Z { .. } => Some('z'),
            Helper::R => Some('r'),
        }
    }

    fn template(self) -> &'static Template {
        TEMPLATES
            .iter()
            .find(|t| t.name == self)
            .expect("every schema name has a template")
    }
}

impl fmt::Display for SchemaName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SchemaName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        let alias = match key.as_str() {
            "sigma1*" | "sigma1star" | "s1*" => Some(SchemaName::Sigma1Star),
            _ => None,
        };
        alias
            .or_else(|| {
                SchemaName::ALL
                    .into_iter()
                    .find(|n| n.as_str().to_ascii_lowercase() == key)
            })
            .ok_or_else(|| Error::Parse(format!("unknown schema name {s:?}")))
    }
}

/// Affine congruence `k0 + kb b + kc c + kd d` used for helper right-hand sides.
#[derive(Debug, Clone, Copy)]
struct Linear {
    k0: i64,
    kb: i64,
    kc: i64,
    kd: i64,
}

impl Linear {
    fn eval(&self, p: &PropellerParams) -> i64 {
        (self.k0 + self.kb * p.b as i64 + self.kc * p.c as i64 + self.kd * p.d as i64)
            .rem_euclid(p.n as i64)
    }
}

#[derive(Debug, Clone, Copy)]
enum Helper {
    None,
    /// `coeff * z == rhs (mod n)`.
    Z { coeff: i64, rhs: Linear },
    /// The integer `r` of the involution on the `n = 6m` subfamily.
    R,
}

struct Template {
    name: SchemaName,
    modulus: usize,
    helper: Helper,
    /// Rows for A, B, C; each row has `modulus` entries.
    rows: [&'static [&'static str]; 3],
}

const fn lin(k0: i64, kb: i64, kc: i64, kd: i64) -> Linear {
    Linear { k0, kb, kc, kd }
}

const SIGMA1_ROWS: [&[&str]; 3] = [
    &["A_{id}", "B_{(i-1)d}"],
    &["A_{id+1}", "C_{(i-1)d+2}"],
    &["B_{id+1-2d}", "C_{(i-1)d+2-d}"],
];

const SIGMA2_ROWS: [&[&str]; 3] = [
    &["A_{id}", "B_{(i-1)d}"],
    &["A_{id-1}", "C_{(i-1)d}"],
    &["B_{id-1-2d}", "C_{(i-1)d-d}"],
];

static TEMPLATES: [Template; 19] = [
    Template {
        name: SchemaName::Rho,
        modulus: 1,
        helper: Helper::None,
        rows: [&["A_{i+1}"], &["B_{i+1}"], &["C_{i+1}"]],
    },
    Template {
        name: SchemaName::Mu,
        modulus: 1,
        helper: Helper::None,
        rows: [&["A_{-i}"], &["B_{-i-b}"], &["C_{-i-b+c}"]],
    },
    Template {
        name: SchemaName::Sigma1,
        modulus: 2,
        helper: Helper::None,
        rows: SIGMA1_ROWS,
    },
    Template {
        name: SchemaName::Sigma1Star,
        modulus: 6,
        helper: Helper::R,
        rows: [
            &[
                "A_{ir}",
                "A_{(i-1)r+1}",
                "B_{(i-2)r+1}",
                "C_{(i-3)r+3}",
                "C_{(i-4)r+3+d}",
                "B_{(i-5)r+3+d}",
            ],
            &[
                "B_{ir}",
                "A_{(i-1)r+2}",
                "A_{(i-2)r+1+2d}",
                "B_{(i-3)r+3}",
                "C_{(i-4)r+3+2d}",
                "C_{(i-5)r+5+d}",
            ],
            &[
                "C_{ir}",
                "B_{(i-1)r+2-2d}",
                "A_{(i-2)r+2d}",
                "A_{(i-3)r+3}",
                "B_{(i-4)r+1+2d}",
                "C_{(i-5)r+5}",
            ],
        ],
    },
    Template {
        name: SchemaName::Sigma2,
        modulus: 2,
        helper: Helper::None,
        rows: SIGMA2_ROWS,
    },
    Template {
        name: SchemaName::Sigma3,
        modulus: 4,
        helper: Helper::None,
        rows: [
            &["A_{i}", "B_{i-1}", "C_{i-2}", "B_{i+1-b}"],
            &["A_{i+1}", "A_{i-1+b}", "C_{i-5+2b}", "C_{i+1-b}"],
            &["A_{i+2}", "B_{i-1+b}", "C_{i-8+4b}", "B_{i+5-2b}"],
        ],
    },
    Template {
        name: SchemaName::Sigma4,
        modulus: 5,
        helper: Helper::None,
        rows: [
            &["A_{i}", "B_{i-1}", "C_{i-2+c}", "C_{i+b}", "B_{i-1+b}"],
            &["A_{i+1}", "C_{i-1}", "B_{i-2+c}", "C_{i+b+d}", "A_{i-1+b}"],
            &["B_{i+1}", "B_{i-1-c}", "A_{i-2+c}", "C_{i+b+2d}", "A_{i-2+b}"],
        ],
    },
    Template {
        name: SchemaName::Alpha,
        modulus: 4,
        helper: Helper::Z { coeff: 4, rhs: lin(0, 1, -1, 0) },
        rows: [
            &["A_{iz}", "B_{(i-1)z}", "C_{(i-2)z}", "B_{(i-3)z-c}"],
            &["A_{iz+1}", "A_{(i-1)z+b}", "C_{(i-2)z+1+b+c}", "C_{(i-3)z-c}"],
            &["A_{iz+2}", "B_{(i-1)z+b}", "C_{(i-2)z+2+2b+2c}", "B_{(i-3)z-2c}"],
        ],
    },
    Template {
        name: SchemaName::Beta1,
        modulus: 4,
        helper: Helper::Z { coeff: 4, rhs: lin(0, 1, 1, 0) },
        rows: [
            &["A_{iz}", "B_{(i-1)z}", "C_{(i-2)z+c}", "B_{(i-3)z+c}"],
            &["A_{iz+1}", "A_{(i-1)z+b}", "C_{(i-2)z+1+b}", "C_{(i-3)z+2c}"],
            &["B_{iz+1-b}", "A_{(i-1)z-1+b}", "B_{(i-2)z+1+b-c}", "C_{(i-3)z-1+b+c}"],
        ],
    },
    Template {
        name: SchemaName::Beta2,
        modulus: 4,
        helper: Helper::Z { coeff: 4, rhs: lin(0, 1, 1, 0) },
        rows: [
            &["A_{iz}", "B_{(i-1)z}", "C_{(i-2)z+c}", "B_{(i-3)z+c}"],
            &["A_{iz+1}", "C_{(i-1)z}", "C_{(i-2)z+1+b}", "A_{(i-3)z+c}"],
            &["B_{iz+1}", "C_{(i-1)z-1-b+c}", "B_{(i-2)z+1+b}", "A_{(i-3)z-1+c}"],
        ],
    },
    Template {
        name: SchemaName::Beta3,
        modulus: 4,
        helper: Helper::Z { coeff: 4, rhs: lin(0, 1, 1, 0) },
        rows: [
            &["A_{iz}", "B_{(i-1)z}", "C_{(i-2)z+c}", "B_{(i-3)z+c}"],
            &["A_{iz-1}", "A_{(i-1)z+b}", "C_{(i-2)z-1+b}", "C_{(i-3)z+2c}"],
            &["B_{iz-1-b}", "A_{(i-1)z+1+b}", "B_{(i-2)z-1+b-c}", "C_{(i-3)z+1+b+c}"],
        ],
    },
    Template {
        name: SchemaName::Beta4,
        modulus: 4,
        helper: Helper::Z { coeff: 4, rhs: lin(0, 1, 1, 0) },
        rows: [
            &["A_{iz}", "B_{(i-1)z}", "C_{(i-2)z+c}", "B_{(i-3)z+c}"],
            &["A_{iz-1}", "C_{(i-1)z}", "C_{(i-2)z-1+b}", "A_{(i-3)z+c}"],
            &["B_{iz-1}", "C_{(i-1)z+1-b+c}", "B_{(i-2)z-1+b}", "A_{(i-3)z+1+c}"],
        ],
    },
    Template {
        name: SchemaName::Gamma1,
        modulus: 6,
        helper: Helper::Z { coeff: 6, rhs: lin(3, 0, 0, 3) },
        rows: [
            &[
                "A_{iz}",
                "B_{(i-1)z}",
                "C_{(i-2)z+2}",
                "C_{(i-3)z+2+d}",
                "B_{(i-4)z+2+d}",
                "A_{(i-5)z+2+3d}",
            ],
            &[
                "A_{iz+1}",
                "A_{(i-1)z+2d}",
                "B_{(i-2)z+2}",
                "C_{(i-3)z+2+2d}",
                "C_{(i-4)z+4+d}",
                "B_{(i-5)z+2+3d}",
            ],
            &[
                "B_{iz+1-2d}",
                "A_{(i-1)z-1+2d}",
                "A_{(i-2)z+2}",
                "B_{(i-3)z+2d}",
                "C_{(i-4)z+4}",
                "C_{(i-5)z+2+3d}",
            ],
        ],
    },
    Template {
        name: SchemaName::Gamma2,
        modulus: 2,
        helper: Helper::None,
        rows: SIGMA1_ROWS,
    },
    Template {
        name: SchemaName::Gamma3,
        modulus: 6,
        helper: Helper::Z { coeff: 6, rhs: lin(-3, 0, 0, 3) },
        rows: [
            &[
                "A_{iz}",
                "B_{(i-1)z}",
                "C_{(i-2)z}",
                "C_{(i-3)z+d}",
                "B_{(i-4)z-2+d}",
                "A_{(i-5)z-2+3d}",
            ],
            &[
                "A_{iz-1}",
                "A_{(i-1)z+2d}",
                "B_{(i-2)z-2}",
                "C_{(i-3)z+2d}",
                "C_{(i-4)z-2+d}",
                "B_{(i-5)z-2+3d}",
            ],
            &[
                "B_{iz-1-2d}",
                "A_{(i-1)z+1+2d}",
                "A_{(i-2)z-2}",
                "B_{(i-3)z+2d}",
                "C_{(i-4)z-2}",
                "C_{(i-5)z+3d}",
            ],
        ],
    },
    Template {
        name: SchemaName::Gamma4,
        modulus: 2,
        helper: Helper::None,
        rows: SIGMA2_ROWS,
    },
    Template {
        name: SchemaName::Gamma5,
        modulus: 6,
        helper: Helper::Z { coeff: 6, rhs: lin(3, 0, 0, 3) },
        rows: [
            &[
                "A_{iz}",
                "B_{(i-1)z}",
                "C_{(i-2)z+2}",
                "C_{(i-3)z+2+d}",
                "B_{(i-4)z+2+d}",
                "A_{(i-5)z+2+3d}",
            ],
            &[
                "B_{iz-2d}",
                "C_{(i-1)z}",
                "C_{(i-2)z+2-d}",
                "B_{(i-3)z+d}",
                "A_{(i-4)z+2+d}",
                "A_{(i-5)z+1+3d}",
            ],
            &[
                "A_{iz-2d}",
                "B_{(i-1)z-2}",
                "C_{(i-2)z+2-2d}",
                "C_{(i-3)z+d}",
                "B_{(i-4)z+2-d}",
                "A_{(i-5)z+3d}",
            ],
        ],
    },
    Template {
        name: SchemaName::Gamma6,
        modulus: 6,
        helper: Helper::Z { coeff: 6, rhs: lin(-3, 0, 0, 3) },
        rows: [
            &[
                "A_{iz}",
                "B_{(i-1)z}",
                "C_{(i-2)z}",
                "C_{(i-3)z+d}",
                "B_{(i-4)z-2+d}",
                "A_{(i-5)z-2+3d}",
            ],
            &[
                "B_{iz-2d}",
                "C_{(i-1)z+2}",
                "C_{(i-2)z-d}",
                "B_{(i-3)z+d}",
                "A_{(i-4)z-2+d}",
                "A_{(i-5)z-1+3d}",
            ],
            &[
                "A_{iz-2d}",
                "B_{(i-1)z+2}",
                "C_{(i-2)z-2d}",
                "C_{(i-3)z+2+d}",
                "B_{(i-4)z-2-d}",
                "A_{(i-5)z+3d}",
            ],
        ],
    },
    Template {
        name: SchemaName::Delta,
        modulus: 6,
        helper: Helper::None,
        rows: [
            &["A_{i}", "B_{i-1}", "C_{i}", "C_{i-1+d}", "B_{i-2+d}", "A_{i}"],
            &["A_{i+1}", "A_{i-1+2d}", "B_{i}", "C_{i-1+2d}", "C_{i+d}", "B_{i}"],
            &["B_{i+1-2d}", "A_{i-2+2d}", "A_{i}", "B_{i-3+2d}", "C_{i}", "C_{i}"],
        ],
    },
];

/// Index expression over `i, b, c, d, z, r` and integer literals.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Num(i64),
    Sym(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn parse(src: &'a str) -> Result<Expr> {
        let mut p = Parser {
            chars: src.chars().peekable(),
        };
        let e = p.expr()?;
        match p.chars.next() {
            None => Ok(e),
            Some(ch) => Err(Error::Parse(format!("unexpected {ch:?} in {src:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = if self.chars.peek() == Some(&'-') {
            self.chars.next();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        while let Some(&op) = self.chars.peek() {
            match op {
                '+' => {
                    self.chars.next();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                '-' => {
                    self.chars.next();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// Juxtaposed factors multiply: `(i-1)d`, `2d`, `iz`.
    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while matches!(self.chars.peek(), Some(ch) if ch.is_ascii_alphanumeric() || *ch == '(') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.chars.next() {
            Some('(') => {
                let e = self.expr()?;
                match self.chars.next() {
                    Some(')') => Ok(e),
                    other => Err(Error::Parse(format!("expected ')' but found {other:?}"))),
                }
            }
            Some(ch) if ch.is_ascii_digit() => {
                let mut v = ch.to_digit(10).unwrap() as i64;
                while let Some(d) = self.chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v * 10 + d as i64;
                    self.chars.next();
                }
                Ok(Expr::Num(v))
            }
            Some(ch) if "ibcdzr".contains(ch) => Ok(Expr::Sym(ch)),
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl Expr {
    fn eval(&self, env: &Env) -> Result<i64> {
        let n = env.n;
        Ok(match self {
            Expr::Num(v) => v.rem_euclid(n),
            Expr::Sym(s) => env.get(*s)?,
            Expr::Neg(e) => (-e.eval(env)?).rem_euclid(n),
            Expr::Add(a, b) => (a.eval(env)? + b.eval(env)?).rem_euclid(n),
            Expr::Sub(a, b) => (a.eval(env)? - b.eval(env)?).rem_euclid(n),
            Expr::Mul(a, b) => {
                ((a.eval(env)? as i128 * b.eval(env)? as i128).rem_euclid(n as i128)) as i64
            }
        })
    }
}

struct Env<'a> {
    n: i64,
    i: i64,
    params: &'a PropellerParams,
    free: &'a BTreeMap<char, i64>,
}

impl Env<'_> {
    fn get(&self, s: char) -> Result<i64> {
        let v = match s {
            'i' => self.i,
            'b' => self.params.b as i64,
            'c' => self.params.c as i64,
            'd' => self.params.d as i64,
            other => *self
                .free
                .get(&other)
                .ok_or_else(|| Error::Constraint(format!("helper symbol {other} not supplied")))?,
        };
        Ok(v.rem_euclid(self.n))
    }
}

/// One cell of a schema: `X_i -> target_{multiplier * i + offset}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemaEntry {
    pub target: VertexClass,
    pub multiplier: i64,
    pub offset: i64,
}

/// A schema with its parameters substituted, ready to instantiate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSchema {
    pub name: SchemaName,
    pub modulus: usize,
    pub n: usize,
    /// Indexed by `class * modulus + residue`.
    pub entries: Vec<SchemaEntry>,
    pub free: BTreeMap<char, i64>,
}

impl ResidueSchema {
    pub fn entry(&self, class: VertexClass, residue: usize) -> SchemaEntry {
        self.entries[class.ordinal() * self.modulus + residue]
    }
}

fn parse_cell(cell: &str) -> Result<(VertexClass, Expr)> {
    let class = match cell.chars().next() {
        Some('A') => VertexClass::A,
        Some('B') => VertexClass::B,
        Some('C') => VertexClass::C,
        _ => return Err(Error::Parse(format!("bad schema cell {cell:?}"))),
    };
    let body = cell
        .strip_prefix(|_: char| true)
        .and_then(|s| s.strip_prefix("_{"))
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("bad schema cell {cell:?}")))?;
    Ok((class, Parser::parse(body)?))
}

/// The integer `r` fixed by the two-case rule, when one of the cases applies.
pub fn sigma1_star_r(params: &PropellerParams) -> Option<i64> {
    let n = params.n as i64;
    if n % 6 != 0 {
        return None;
    }
    let m = n / 6;
    let three_d = (3 * params.d as i64).rem_euclid(n);
    if three_d == 3 % n {
        Some(1)
    } else if m % 2 == 0 && three_d == (3 * m + 3).rem_euclid(n) {
        Some(m / 2 + 1)
    } else {
        None
    }
}

fn check_r(params: &PropellerParams, r: i64) -> Result<()> {
    let n = params.n as i64;
    if (12 * r - 12).rem_euclid(n) != 0 {
        return Err(Error::Constraint(format!("12r = {} is not 12 mod {n}", 12 * r)));
    }
    let m = n / 6;
    let three_d = (3 * params.d as i64).rem_euclid(n);
    if three_d == 3 % n && (6 * r - 6).rem_euclid(n) != 0 {
        return Err(Error::Constraint(format!("3d = 3 but 6r = {} is not 6 mod {n}", 6 * r)));
    }
    if m % 2 == 0 && three_d == (3 * m + 3).rem_euclid(n) && (6 * r - 3 * m - 6).rem_euclid(n) != 0 {
        return Err(Error::Constraint(format!(
            "3d = 3m+3 but 6r = {} is not 3m+6 mod {n}",
            6 * r
        )));
    }
    Ok(())
}

/// Substitutes `params` and the helper symbols into the named table.
pub fn schema(
    name: SchemaName,
    params: &PropellerParams,
    free: &BTreeMap<char, i64>,
) -> Result<ResidueSchema> {
    let t = name.template();
    let n = params.n as i64;
    let mut used = BTreeMap::new();
    match t.helper {
        Helper::None => {}
        Helper::Z { coeff, rhs } => {
            let z = *free
                .get(&'z')
                .ok_or_else(|| Error::Constraint(format!("{name} requires the helper z")))?;
            let want = rhs.eval(params);
            if (coeff * z - want).rem_euclid(n) != 0 {
                return Err(Error::Constraint(format!(
                    "{name}: {coeff}z = {} is not {want} mod {n}",
                    coeff * z
                )));
            }
            used.insert('z', z.rem_euclid(n));
        }
        Helper::R => {
            let r = *free
                .get(&'r')
                .ok_or_else(|| Error::Constraint(format!("{name} requires the helper r")))?;
            if params.n.is_multiple_of(t.modulus) {
                check_r(params, r)?;
            }
            used.insert('r', r.rem_euclid(n));
        }
    }
    if !params.n.is_multiple_of(t.modulus) {
        return Err(Error::Divisibility {
            modulus: t.modulus,
            n: params.n,
        });
    }
    let mut entries = Vec::with_capacity(3 * t.modulus);
    for row in t.rows {
        debug_assert_eq!(row.len(), t.modulus);
        for cell in row {
            let (target, expr) = parse_cell(cell)?;
            let at = |i| {
                expr.eval(&Env {
                    n,
                    i,
                    params,
                    free: &used,
                })
            };
            let f0 = at(0)?;
            let f1 = at(1 % n)?;
            entries.push(SchemaEntry {
                target,
                multiplier: (f1 - f0).rem_euclid(n),
                offset: f0,
            });
        }
    }
    Ok(ResidueSchema {
        name,
        modulus: t.modulus,
        n: params.n,
        entries,
        free: used,
    })
}

/// Every assignment of the schema's helper symbol that satisfies its congruence
/// (one empty map when there is no helper).
pub fn helper_solutions(name: SchemaName, params: &PropellerParams) -> Vec<BTreeMap<char, i64>> {
    match name.template().helper {
        Helper::None => vec![BTreeMap::new()],
        Helper::R => sigma1_star_r(params)
            .map(|r| vec![BTreeMap::from([('r', r)])])
            .unwrap_or_default(),
        Helper::Z { coeff, rhs } => {
            let n = params.n as i64;
            let want = rhs.eval(params);
            (0..n)
                .filter(|z| (coeff * z - want).rem_euclid(n) == 0)
                .map(|z| BTreeMap::from([('z', z)]))
                .collect()
        }
    }
}

/// Raw image array of a schema, bijective or not.
pub fn image_array(s: &ResidueSchema, params: &PropellerParams) -> Result<Vec<usize>> {
    if !params.n.is_multiple_of(s.modulus) {
        return Err(Error::Divisibility {
            modulus: s.modulus,
            n: params.n,
        });
    }
    if params.n != s.n {
        return Err(Error::DegreeMismatch(3 * s.n, 3 * params.n));
    }
    let n = params.n as i64;
    let mut images = Vec::with_capacity(3 * params.n);
    for class in VertexClass::ALL {
        for i in 0..n {
            let e = s.entry(class, (i as usize) % s.modulus);
            let idx = ((e.multiplier as i128 * i as i128 + e.offset as i128).rem_euclid(n as i128)) as i64;
            images.push(params.vertex(e.target, idx));
        }
    }
    Ok(images)
}

pub fn instantiate(s: &ResidueSchema, params: &PropellerParams) -> Result<Permutation> {
    Permutation::new(image_array(s, params)?)
}

/// Vertices that the schema never maps onto.
pub fn unhit_vertices(s: &ResidueSchema, params: &PropellerParams) -> Result<Vec<usize>> {
    Ok(unhit(&image_array(s, params)?))
}

/// Instantiates a schema that needs no helper symbol, or whose helper is
/// determined by the parameters (first solution).
pub fn named(name: SchemaName, params: &PropellerParams) -> Result<Permutation> {
    let free = helper_solutions(name, params)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Constraint(format!("{name}: no helper value solves its congruence")))?;
    instantiate(&schema(name, params, &free)?, params)
}

pub fn rho(params: &PropellerParams) -> Permutation {
    named(SchemaName::Rho, params).expect("rho is always defined")
}

pub fn mu(params: &PropellerParams) -> Permutation {
    named(SchemaName::Mu, params).expect("mu is always defined")
}

/// A word such as `"Sigma1Star Mu Sigma1Star Mu"` or `"Rho^-1"`, composed
/// left to right.
pub fn evaluate_word(
    params: &PropellerParams,
    word: &str,
    free: &BTreeMap<char, i64>,
) -> Result<Permutation> {
    let mut acc = Permutation::identity(params.vertex_count());
    for token in word.split_whitespace() {
        let (base, power) = match token.split_once('^') {
            Some((b, e)) => (
                b,
                e.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?,
            ),
            None => (token, 1),
        };
        if base == "1" || base.eq_ignore_ascii_case("id") {
            continue;
        }
        let name: SchemaName = base.parse()?;
        let mut vars = free.clone();
        if name.helper().is_some_and(|h| !vars.contains_key(&h)) {
            if let Some(sol) = helper_solutions(name, params).into_iter().next() {
                vars.extend(sol);
            }
        }
        let p = instantiate(&schema(name, params, &vars)?, params)?;
        acc = acc.compose(&p.pow(power))?;
    }
    Ok(acc)
}

/// True iff the two words evaluate to the same permutation on `params`.
pub fn verify_identity(
    params: &PropellerParams,
    lhs: &str,
    rhs: &str,
    free: &BTreeMap<char, i64>,
) -> Result<bool> {
    Ok(evaluate_word(params, lhs, free)? == evaluate_word(params, rhs, free)?)
}
