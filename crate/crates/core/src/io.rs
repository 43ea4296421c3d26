//! Text formats for groups and actions.
//!
//! A group file looks like
//!
//! ```text
//! GROUPFILE 1
//! order 2
//! elems 0 1
//! table
//! 0 1
//! 1 0
//! ```
//!
//! The writer emits exactly this layout (single spaces, trailing newline).
//! The reader accepts any amount of whitespace between tokens, skips blank
//! lines, and runs full group validation.
//!
//! An action file has the header `ACTIONFILE 1`, a `group <ref>` line naming
//! the acting group (a path or an expression, resolved by the caller), a
//! `domain` line of point tokens, and one row of domain indices per group
//! element.

use std::fmt::Write as _;
use std::path::Path;

use crate::action::GroupAction;
use crate::error::{Error, Result};
use crate::group::{Group, Limits};

pub fn write_group(g: &Group) -> String {
    let n = g.order();
    let mut out = String::with_capacity(n * n * 3 + 64);
    out.push_str("GROUPFILE 1\n");
    let _ = writeln!(out, "order {n}");
    out.push_str("elems");
    for l in g.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push_str("\ntable\n");
    for i in g.elements() {
        push_row(&mut out, g.row(i));
    }
    out
}

fn push_row(out: &mut String, row: &[usize]) {
    for (j, v) in row.iter().enumerate() {
        if j > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

/// Non-blank lines with their 1-based line numbers, split into tokens.
fn token_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty())
}

struct Lines<'a, I: Iterator<Item = (usize, Vec<&'a str>)>> {
    inner: I,
    last: usize,
}

impl<'a, I: Iterator<Item = (usize, Vec<&'a str>)>> Lines<'a, I> {
    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.inner.next() {
            Some((n, t)) => {
                self.last = n;
                Ok((n, t))
            }
            None => Err(Error::parse(self.last + 1, format!("unexpected end of file, expected {what}"))),
        }
    }

    fn keyword(&mut self, key: &str) -> Result<(usize, Vec<&'a str>)> {
        let (n, t) = self.next(key)?;
        if t[0] != key {
            return Err(Error::parse(n, format!("expected `{key}`, found `{}`", t[0])));
        }
        Ok((n, t))
    }

    fn finish(mut self) -> Result<()> {
        match self.inner.next() {
            Some((n, _)) => Err(Error::parse(n, "trailing content")),
            None => Ok(()),
        }
    }
}

fn parse_index(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a natural number")))
}

fn parse_rows<'a, I>(lines: &mut Lines<'a, I>, count: usize, width: usize) -> Result<Vec<Vec<usize>>>
where
    I: Iterator<Item = (usize, Vec<&'a str>)>,
{
    let mut rows = Vec::with_capacity(count);
    for r in 0..count {
        let (n, t) = lines.next(&format!("row {r}"))?;
        if t.len() != width {
            return Err(Error::parse(n, format!("row {r} has {} entries, expected {width}", t.len())));
        }
        rows.push(t.iter().map(|tok| parse_index(n, tok)).collect::<Result<Vec<_>>>()?);
    }
    Ok(rows)
}

fn check_version(t: &[&str], n: usize, magic: &str) -> Result<()> {
    if t != [magic, "1"] {
        return Err(Error::parse(n, format!("expected `{magic} 1` header")));
    }
    Ok(())
}

pub fn read_group(text: &str) -> Result<Group> {
    read_group_with(text, &Limits::default())
}

/// Parses and validates a group file, refusing orders above `limits`
/// before allocating the table.
pub fn read_group_with(text: &str, limits: &Limits) -> Result<Group> {
    let mut lines = Lines {
        inner: token_lines(text),
        last: 0,
    };
    let (n, t) = lines.next("header")?;
    check_version(&t, n, "GROUPFILE")?;
    let (n, t) = lines.keyword("order")?;
    if t.len() != 2 {
        return Err(Error::parse(n, "expected `order N`"));
    }
    let order = parse_index(n, t[1])?;
    limits.check_order(order)?;
    let (n, t) = lines.keyword("elems")?;
    if t.len() - 1 != order {
        return Err(Error::parse(n, format!("{} element tokens for order {order}", t.len() - 1)));
    }
    let labels: Vec<String> = t[1..].iter().map(|s| s.to_string()).collect();
    let (n, t) = lines.keyword("table")?;
    if t.len() != 1 {
        return Err(Error::parse(n, "unexpected tokens after `table`"));
    }
    let rows = parse_rows(&mut lines, order, order)?;
    lines.finish()?;
    Group::with_limits(labels, rows, limits)
}

pub fn load_group(path: impl AsRef<Path>, limits: &Limits) -> Result<Group> {
    read_group_with(&std::fs::read_to_string(path)?, limits)
}

pub fn save_group(g: &Group, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_group(g))?;
    Ok(())
}

/// Serializes `a`, naming its group by `group_ref` and its points by `token`.
/// Tokens must be nonempty and free of whitespace.
pub fn write_action<D>(a: &GroupAction<D>, group_ref: &str, token: impl Fn(&D) -> String) -> Result<String>
where
    D: Clone + Eq + std::hash::Hash + std::fmt::Debug,
{
    let group_ref = group_ref.trim();
    if group_ref.is_empty() || group_ref.contains('\n') {
        return Err(Error::Precondition("group reference must be a single nonempty line".into()));
    }
    let mut out = String::new();
    out.push_str("ACTIONFILE 1\n");
    let _ = writeln!(out, "group {group_ref}");
    out.push_str("domain");
    for s in a.domain() {
        let t = token(s);
        if t.is_empty() || t.chars().any(char::is_whitespace) {
            return Err(Error::Precondition(format!("domain token `{t}` is empty or has whitespace")));
        }
        out.push(' ');
        out.push_str(&t);
    }
    out.push('\n');
    for x in a.group().elements() {
        push_row(&mut out, a.row(x));
    }
    Ok(out)
}

/// The raw content of an action file; the group reference still needs
/// resolving before the action can be rebuilt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionFile {
    pub group_ref: String,
    pub domain: Vec<String>,
    pub rows: Vec<Vec<usize>>,
}

impl ActionFile {
    pub fn parse(text: &str) -> Result<ActionFile> {
        let mut lines = Lines {
            inner: token_lines(text),
            last: 0,
        };
        let (n, t) = lines.next("header")?;
        check_version(&t, n, "ACTIONFILE")?;
        let (n, t) = lines.keyword("group")?;
        if t.len() < 2 {
            return Err(Error::parse(n, "missing group reference"));
        }
        let group_ref = t[1..].join(" ");
        let (_, t) = lines.keyword("domain")?;
        let domain: Vec<String> = t[1..].iter().map(|s| s.to_string()).collect();
        let width = domain.len();
        let mut rows = Vec::new();
        for (n, t) in lines.inner {
            if t.len() != width {
                return Err(Error::parse(n, format!("row has {} entries, expected {width}", t.len())));
            }
            rows.push(t.iter().map(|tok| parse_index(n, tok)).collect::<Result<Vec<_>>>()?);
        }
        Ok(ActionFile { group_ref, domain, rows })
    }

    /// Rebuilds the action over `group`, re-checking every action axiom.
    pub fn into_action(self, group: &Group) -> Result<GroupAction<String>> {
        GroupAction::from_table(group, self.domain, self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::conjugacy_action;
    use crate::generators::{cyclic_group, dihedral_group};

    #[test]
    fn layout_is_exact() {
        let text = write_group(&cyclic_group(2));
        assert_eq!(text, "GROUPFILE 1\norder 2\nelems 0 1\ntable\n0 1\n1 0\n");
    }

    #[test]
    fn round_trip() {
        let d5 = dihedral_group(5);
        let text = write_group(&d5);
        let back = read_group(&text).unwrap();
        assert_eq!(back, d5);
        assert_eq!(write_group(&back), text);
    }

    #[test]
    fn tolerant_reader() {
        let text = "\n  GROUPFILE   1\norder 2\n\nelems  a   b\ntable\n 0 1 \n1  0\n\n";
        let g = read_group(text).unwrap();
        assert_eq!(g.labels(), &["a", "b"]);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(read_group(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_group("GROUPFILE 2\n"), Err(Error::Parse { line: 1, .. })));
        let short = "GROUPFILE 1\norder 2\nelems a b\ntable\n0 1\n";
        assert!(matches!(read_group(short), Err(Error::Parse { line: 6, .. })));
        let bad_entry = "GROUPFILE 1\norder 2\nelems a b\ntable\n0 1\n1 x\n";
        assert!(matches!(read_group(bad_entry), Err(Error::Parse { line: 6, .. })));
        let not_group = "GROUPFILE 1\norder 2\nelems a b\ntable\n0 1\n1 1\n";
        assert!(read_group(not_group).is_err());
        let huge = "GROUPFILE 1\norder 100000\n";
        assert!(matches!(read_group(huge), Err(Error::OrderTooLarge { .. })));
        let extra = "GROUPFILE 1\norder 1\nelems e\ntable\n0\n0\n";
        assert!(matches!(read_group(extra), Err(Error::Parse { line: 6, .. })));
    }

    #[test]
    fn action_round_trip() {
        let g = dihedral_group(3);
        let a = conjugacy_action(&g);
        let text = write_action(&a, "dihedral(3)", |&s| g.label(s).to_string()).unwrap();
        assert!(text.starts_with("ACTIONFILE 1\ngroup dihedral(3)\ndomain r0 r1 r2 sr0 sr1 sr2\n"));
        let file = ActionFile::parse(&text).unwrap();
        assert_eq!(file.group_ref, "dihedral(3)");
        let back = file.into_action(&g).unwrap();
        for x in g.elements() {
            assert_eq!(back.row(x), a.row(x));
        }
        let again = write_action(&back, "dihedral(3)", |s| s.clone()).unwrap();
        assert_eq!(again, text);
    }

    #[test]
    fn action_loader_revalidates() {
        let text = "ACTIONFILE 1\ngroup cyclic(2)\ndomain a b\n0 1\n0 1\n";
        let file = ActionFile::parse(text).unwrap();
        assert!(file.clone().into_action(&cyclic_group(2)).is_ok());
        let bad = "ACTIONFILE 1\ngroup cyclic(2)\ndomain a b\n1 0\n0 1\n";
        let file = ActionFile::parse(bad).unwrap();
        assert!(matches!(
            file.into_action(&cyclic_group(2)),
            Err(Error::ActionIdentity { .. })
        ));
    }
}
