//! Evaluation results and their one-line printed form.
//!
//! Printed values follow a small grammar, parsed back by [`parse_output`]:
//!
//! ```text
//! line  := item+
//! item  := WORD '=' datum | datum
//! datum := NAT | '[' NAT* ']' | '(' datum* ')' | '{' TOKEN* '}' | WORD
//! ```
//!
//! Numbers, permutations and integer lists print exactly as the expression
//! parser reads them. Groups, subgroups, actions and maps print as records
//! such as `#subgroup order=4 index=3 elems=(0 7 16 23)`; element lists are
//! parent indices. Domain points of actions print as `{...}` token sets.

use std::fmt;

use gt_core::{Group, GroupAction, GroupMap, Perm, SimplicityVerdict, Subgroup, SylowReport, Symmetric};

#[derive(Debug, Clone)]
pub enum Value {
    Nat(usize),
    Bool(bool),
    Perm(Perm),
    PermList(Vec<Perm>),
    /// A group, with the expression text that produced it.
    Group(Group, String),
    Subgroup(Subgroup, String),
    /// An action, with the expression text naming its group.
    Action(GroupAction<String>, String),
    Map(GroupMap<Symmetric>),
    IntList(Vec<usize>),
    Classes(Vec<Vec<usize>>),
    SubgroupList(Vec<Subgroup>),
    Points(Vec<String>),
    Orbits(Vec<Vec<String>>),
    Verdict(SimplicityVerdict),
    Report(SylowReport),
    Saved(String),
}

impl Value {
    /// Name of the value's kind, for error messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Nat(_) => "natural number",
            Value::Bool(_) => "boolean",
            Value::Perm(_) => "permutation",
            Value::PermList(_) => "permutation list",
            Value::Group(..) => "group",
            Value::Subgroup(..) => "subgroup",
            Value::Action(..) => "action",
            Value::Map(_) => "map",
            Value::IntList(_) => "integer list",
            Value::Classes(_) => "class list",
            Value::SubgroupList(_) => "subgroup list",
            Value::Points(_) => "point set",
            Value::Orbits(_) => "orbit list",
            Value::Verdict(_) => "verdict",
            Value::Report(_) => "sylow report",
            Value::Saved(_) => "file",
        }
    }
}

struct List<'a, T>(&'a [T]);

impl<T: fmt::Display> fmt::Display for List<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

struct Points<'a>(&'a [String]);

impl fmt::Display for Points<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(" "))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Nat(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Perm(p) => write!(f, "{p}"),
            Value::PermList(ps) => write!(f, "{}", List(ps)),
            Value::Group(g, _) => write!(f, "#group order={}", g.order()),
            Value::Subgroup(h, _) => write!(
                f,
                "#subgroup order={} index={} elems={}",
                h.order(),
                h.index(),
                List(h.elements())
            ),
            Value::Action(a, _) => write!(f, "#action order={} degree={}", a.group().order(), a.degree()),
            Value::Map(m) => write!(
                f,
                "#map order={} degree={} homomorphism={}",
                m.source().order(),
                m.target().degree,
                m.is_homomorphism()
            ),
            Value::IntList(v) => write!(f, "{}", List(v)),
            Value::Classes(cs) => {
                let lists: Vec<String> = cs.iter().map(|c| List(c).to_string()).collect();
                write!(f, "{}", List(&lists))
            }
            Value::SubgroupList(hs) => {
                let lists: Vec<String> = hs.iter().map(|h| List(h.elements()).to_string()).collect();
                write!(f, "{}", List(&lists))
            }
            Value::Points(ps) => write!(f, "{}", Points(ps)),
            Value::Orbits(os) => {
                let sets: Vec<String> = os.iter().map(|o| Points(o).to_string()).collect();
                write!(f, "{}", List(&sets))
            }
            Value::Verdict(v) => match &v.witness {
                None => f.write_str("simple"),
                Some(w) => write!(f, "not-simple witness-order={} method={}", w.order(), v.method),
            },
            Value::Report(r) => write!(
                f,
                "p={} order={} np={} index={} nindex={}",
                r.prime,
                r.sylow.order(),
                r.np,
                r.index,
                r.nindex
            ),
            Value::Saved(path) => write!(f, "#saved path={path}"),
        }
    }
}

/// A parsed item of a printed value line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Datum {
    Nat(usize),
    Perm(Vec<usize>),
    List(Vec<Datum>),
    Points(Vec<String>),
    Word(String),
    Pair(String, Box<Datum>),
}

fn is_word_char(c: char) -> bool {
    !c.is_whitespace() && !"()[]{}=".contains(c)
}

struct OutputParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> OutputParser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn fail<T>(&self, what: &str) -> Result<T, String> {
        Err(format!("{what} at offset {}", self.pos))
    }

    fn word(&mut self) -> &'a str {
        let rest = self.rest();
        let len = rest.find(|c: char| !is_word_char(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn datum(&mut self) -> Result<Datum, String> {
        self.skip_ws();
        match self.rest().chars().next() {
            Some('(') => {
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    if self.rest().starts_with(')') {
                        self.pos += 1;
                        return Ok(Datum::List(items));
                    }
                    if self.rest().is_empty() {
                        return self.fail("unclosed `(`");
                    }
                    items.push(self.datum()?);
                }
            }
            Some('[') => {
                let Some(end) = self.rest().find(']') else {
                    return self.fail("unclosed `[`");
                };
                let inner = &self.rest()[1..end];
                let images = inner
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| format!("bad permutation entry `{t}`")))
                    .collect::<Result<Vec<_>, _>>()?;
                self.pos += end + 1;
                Ok(Datum::Perm(images))
            }
            Some('{') => {
                let Some(end) = self.rest().find('}') else {
                    return self.fail("unclosed `{`");
                };
                let inner = &self.rest()[1..end];
                self.pos += end + 1;
                Ok(Datum::Points(inner.split_whitespace().map(str::to_string).collect()))
            }
            Some(c) if is_word_char(c) => {
                let w = self.word();
                if self.rest().starts_with('=') {
                    self.pos += 1;
                    return Ok(Datum::Pair(w.to_string(), Box::new(self.datum()?)));
                }
                if w.chars().all(|c| c.is_ascii_digit()) {
                    return w.parse().map(Datum::Nat).map_err(|_| format!("number `{w}` too large"));
                }
                Ok(Datum::Word(w.to_string()))
            }
            _ => self.fail("expected a value"),
        }
    }
}

/// Parses one printed value line into its items.
pub fn parse_output(line: &str) -> Result<Vec<Datum>, String> {
    let mut p = OutputParser { src: line, pos: 0 };
    let mut items = Vec::new();
    loop {
        p.skip_ws();
        if p.rest().is_empty() {
            break;
        }
        items.push(p.datum()?);
    }
    if items.is_empty() {
        return Err("empty line".into());
    }
    Ok(items)
}
