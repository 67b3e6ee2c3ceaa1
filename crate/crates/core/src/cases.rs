//! The 31 relation combinations that give every edge the same number of
//! 6-cycles when the girth is at least 5 and `n > 78`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::param_orbit;
use crate::graph::{build_propeller, PropellerParams};
use crate::relations::{active_relations, predicted_n6};

/// `k0 + kb*b + kc*c + kd*d` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct LinearForm {
    pub k0: i64,
    pub kb: i64,
    pub kc: i64,
    pub kd: i64,
}

impl LinearForm {
    /// Parses sums like `1+b-c`, `2d`, `2b-3`.
    pub fn parse(s: &str) -> Result<LinearForm> {
        let mut out = LinearForm::default();
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        if rest.is_empty() {
            return Err(Error::Parse("empty linear form".into()));
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1..].find(['+', '-']).map_or(body.len(), |k| k + 1);
            let term = &body[..end];
            rest = &body[end..];
            let digits = term.chars().take_while(char::is_ascii_digit).count();
            let coef: i64 = if digits == 0 {
                1
            } else {
                term[..digits]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad term {term:?}")))?
            };
            let slot = match &term[digits..] {
                "" if digits > 0 => &mut out.k0,
                "b" => &mut out.kb,
                "c" => &mut out.kc,
                "d" => &mut out.kd,
                _ => return Err(Error::Parse(format!("bad term {term:?}"))),
            };
            *slot += sign * coef;
        }
        Ok(out)
    }

    pub fn eval(&self, b: i64, c: i64, d: i64) -> i64 {
        self.k0 + self.kb * b + self.kc * c + self.kd * d
    }

    /// Replaces `b`, `c`, `d` by the given forms.
    fn substitute(&self, forms: &[LinearForm; 3]) -> LinearForm {
        let mut out = LinearForm { k0: self.k0, ..Default::default() };
        for (coef, f) in [self.kb, self.kc, self.kd].into_iter().zip(forms) {
            out.k0 += coef * f.k0;
            out.kb += coef * f.kb;
            out.kc += coef * f.kc;
            out.kd += coef * f.kd;
        }
        out
    }
}

/// A congruence `lhs = rhs (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Congruence {
    pub lhs: LinearForm,
    pub rhs: LinearForm,
}

impl Congruence {
    pub fn parse(s: &str) -> Result<Congruence> {
        let (l, r) = s
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("congruence {s:?} has no '='")))?;
        Ok(Congruence {
            lhs: LinearForm::parse(l)?,
            rhs: LinearForm::parse(r)?,
        })
    }

    pub fn holds(&self, p: &PropellerParams) -> bool {
        let (b, c, d) = (p.b as i64, p.c as i64, p.d as i64);
        (self.lhs.eval(b, c, d) - self.rhs.eval(b, c, d)).rem_euclid(p.n as i64) == 0
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseRow {
    pub id: u32,
    pub expected_n6: usize,
    /// Forms for `(b, c, d)` in the free symbols.
    pub template: [String; 3],
    pub constraints: Vec<String>,
}

const ROWS: [(u32, usize, [&str; 3], &[&str]); 31] = [
    (1, 3, ["b", "c", "1+b+c"], &[]),
    (2, 4, ["b", "c", "1+b"], &[]),
    (3, 4, ["b", "c", "1+c"], &[]),
    (4, 4, ["b", "c", "1+b-c"], &["2c=2"]),
    (5, 4, ["b", "c", "1+b-c"], &["2b=2c"]),
    (6, 4, ["b", "2+b", "d"], &["2+2b=2d"]),
    (7, 4, ["b", "2+b", "d"], &["2d=2"]),
    (8, 5, ["b", "c", "d"], &["2b=2", "2c=2d"]),
    (9, 5, ["b", "b-2", "3"], &["2b=8"]),
    (10, 5, ["b", "2+b", "3"], &["2b=4"]),
    (11, 5, ["b", "b-2", "2b-1"], &["6b=4"]),
    (12, 5, ["b", "b-2", "2b-3"], &["6b=8"]),
    (13, 5, ["b", "2+b", "d"], &["4b=0", "2d=2"]),
    (14, 5, ["b", "b-2", "d"], &["4b=8", "2d=2"]),
    (15, 6, ["b", "c", "1"], &[]),
    (16, 6, ["2d", "2", "d"], &[]),
    (17, 6, ["b", "c", "1+b-c"], &["2b=2", "2c=2d"]),
    (18, 6, ["b", "b-2", "2b-1"], &["4b=4"]),
    (19, 6, ["b", "2+b", "b-1"], &["4b=0"]),
    (20, 6, ["b", "2+b", "b-1"], &["2b=4"]),
    (21, 6, ["b", "b-2", "b-3"], &["4b=8"]),
    (22, 6, ["b", "b-2", "b-3"], &["2b=8"]),
    (23, 7, ["b", "c", "1-c"], &["2b=2", "4c=2"]),
    (24, 7, ["b", "c", "1-b+c"], &["2b=2"]),
    (25, 7, ["b", "c", "1+b"], &["2b=2", "2c=4"]),
    (26, 7, ["2d", "2", "d"], &["3d=3"]),
    (27, 8, ["b", "2+b", "1+b"], &[]),
    (28, 9, ["b", "c", "1"], &["2b=2", "2c=2"]),
    (29, 9, ["b", "2+b", "1"], &[]),
    (30, 9, ["2d", "2", "d"], &["3d=1"]),
    (31, 9, ["6", "2", "3"], &[]),
];

/// Rows whose instances can be edge-transitive.
pub const EDGE_TRANSITIVE_CASES: [u32; 4] = [1, 5, 16, 26];

pub fn case_rows() -> Vec<CaseRow> {
    ROWS.iter()
        .map(|&(id, n6, t, cs)| CaseRow {
            id,
            expected_n6: n6,
            template: t.map(str::to_string),
            constraints: cs.iter().map(|s| s.to_string()).collect(),
        })
        .collect()
}

pub fn case_row(id: u32) -> Option<CaseRow> {
    case_rows().into_iter().find(|r| r.id == id)
}

impl fmt::Display for CaseRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "case {}: Pr_n({},{},{})",
            self.id, self.template[0], self.template[1], self.template[2]
        )?;
        if !self.constraints.is_empty() {
            write!(f, " where {}", self.constraints.join(", "))?;
        }
        write!(f, ", N6 = {}", self.expected_n6)
    }
}

struct Compiled {
    forms: [LinearForm; 3],
    free: [bool; 3],
    constraints: Vec<Congruence>,
}

impl CaseRow {
    fn compile(&self) -> Compiled {
        let forms = self
            .template
            .clone()
            .map(|s| LinearForm::parse(&s).expect("case templates parse"));
        let identity = [
            LinearForm { kb: 1, ..Default::default() },
            LinearForm { kc: 1, ..Default::default() },
            LinearForm { kd: 1, ..Default::default() },
        ];
        let free = std::array::from_fn(|k| forms[k] == identity[k]);
        Compiled {
            forms,
            free,
            constraints: self
                .constraints
                .iter()
                .map(|s| Congruence::parse(s).expect("case constraints parse"))
                .collect(),
        }
    }

    /// True when `p` has the row's parameter form and meets its constraints.
    pub fn fits(&self, p: &PropellerParams) -> bool {
        let c = self.compile();
        fits_compiled(&c, p)
    }

    /// Tuples of order `n` of the row's form, in lexicographic order.
    pub fn instances(&self, n: usize) -> Vec<PropellerParams> {
        let c = self.compile();
        // constraints rewritten in the free symbols, checked as soon as the
        // symbols they mention are fixed
        let reduced: Vec<LinearForm> = c
            .constraints
            .iter()
            .map(|k| {
                let diff = LinearForm {
                    k0: k.lhs.k0 - k.rhs.k0,
                    kb: k.lhs.kb - k.rhs.kb,
                    kc: k.lhs.kc - k.rhs.kc,
                    kd: k.lhs.kd - k.rhs.kd,
                };
                diff.substitute(&c.forms)
            })
            .collect();
        let last_symbol = |f: &LinearForm| {
            if f.kd != 0 {
                2
            } else if f.kc != 0 {
                1
            } else if f.kb != 0 {
                0
            } else {
                usize::MAX
            }
        };
        let ni = n as i64;
        let ok_at = |level: usize, b: i64, cc: i64, d: i64| {
            reduced
                .iter()
                .filter(|f| last_symbol(f) == level || (level == 0 && last_symbol(f) == usize::MAX))
                .all(|f| f.eval(b, cc, d).rem_euclid(ni) == 0)
        };
        let range = |k: usize| if c.free[k] { 1..n } else { 0..1 };
        let mut out = Vec::new();
        for b in range(0).map(|x| x as i64) {
            if !ok_at(0, b, 0, 0) {
                continue;
            }
            for cc in range(1).map(|x| x as i64) {
                if !ok_at(1, b, cc, 0) {
                    continue;
                }
                for d in range(2).map(|x| x as i64) {
                    if !ok_at(2, b, cc, d) {
                        continue;
                    }
                    let vals = c.forms.map(|f| f.eval(b, cc, d));
                    let Ok(p) = PropellerParams::reduced(n, vals[0], vals[1], vals[2]) else {
                        continue;
                    };
                    if fits_compiled(&c, &p) {
                        out.push(p);
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

fn fits_compiled(c: &Compiled, p: &PropellerParams) -> bool {
    let (b, cc, d) = (p.b as i64, p.c as i64, p.d as i64);
    let actual = [b, cc, d];
    let n = p.n as i64;
    c.forms
        .iter()
        .zip(actual)
        .all(|(f, a)| (f.eval(b, cc, d) - a).rem_euclid(n) == 0)
        && c.constraints.iter().all(|k| k.holds(p))
}

/// The row describing `p`: the smallest id whose form fits `p` and whose
/// `N6` equals the predicted uniform count, or failing that the same test on
/// the rest of the lemma orbit. Meaningful for girth at least 5.
pub fn match_case(p: &PropellerParams) -> Option<u32> {
    let pred = predicted_n6(p);
    if pred.iter().any(|&x| x != pred[0]) {
        return None;
    }
    let rows: Vec<(u32, Compiled)> = case_rows()
        .into_iter()
        .filter(|r| r.expected_n6 == pred[0])
        .map(|r| (r.id, r.compile()))
        .collect();
    if let Some((id, _)) = rows.iter().find(|(_, c)| fits_compiled(c, p)) {
        return Some(*id);
    }
    let orbit = param_orbit(p);
    rows.iter()
        .find(|(_, c)| orbit.iter().any(|q| fits_compiled(c, q)))
        .map(|(id, _)| *id)
}

/// A constructed instance: smallest `n > min_n` (then lexicographically
/// least tuple) with girth at least 5 whose predicted per-edge 6-cycle count
/// is `N6` on every kind. When `edge_transitive` is set the tuple must also
/// admit the wing-to-flat automorphism.
pub fn find_instance(row: &CaseRow, min_n: usize, max_n: usize, edge_transitive: bool) -> Option<PropellerParams> {
    for n in (min_n + 1)..=max_n {
        let mut best: Option<(usize, PropellerParams)> = None;
        for p in row.instances(n) {
            if predicted_n6(&p) != [row.expected_n6; 6] {
                continue;
            }
            let g = build_propeller(p).expect("instances are valid");
            if crate::cycles::propeller_girth(&g, &p).map_or(true, |gi| gi < 5) {
                continue;
            }
            if edge_transitive
                && crate::aut::edge_transitivity_witness(&g, &p)
                    .expect("valid seed")
                    .is_none()
            {
                continue;
            }
            let active = active_relations(&p).len();
            if best.is_none_or(|(a, _)| active < a) {
                best = Some((active, p));
            }
        }
        if let Some((_, p)) = best {
            return Some(p);
        }
    }
    None
}
