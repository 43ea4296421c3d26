//! Evaluation of parsed expressions against the engine.

use std::fmt;

use gt_core::action::{conj_sub_action, conjs_sub, conjugacy_action, lcoset_action, normalizer, self_action};
use gt_core::arith::is_prime;
use gt_core::generators::{affine_group, cyclic_group, dihedral_group, direct_product, quaternion_group, semidirect_cyclic};
use gt_core::io::{load_group, save_group, write_action, ActionFile};
use gt_core::perm::{alt_group_with, sym_group_with};
use gt_core::simple::{normal_subgroup, simplicity};
use gt_core::sylow::{sylow_report, sylow_subgroup};
use gt_core::{Group, GroupAction, Limits, Perm, Subgroup};

use crate::expr::{parse, Expr, ParseError};
use crate::value::Value;

#[derive(Debug)]
pub enum CliError {
    Syntax(ParseError),
    /// Misuse: unknown names, wrong arity or argument kinds.
    Usage(String),
    /// An error reported by the engine, with the builtin that raised it.
    Engine(String, gt_core::Error),
}

impl CliError {
    /// 2 for theorem violations (engine bugs), 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(_, e) if e.is_theorem_violation() => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Syntax(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Engine(name, e) if e.is_theorem_violation() => write!(f, "{name}: {e}"),
            CliError::Engine(_, e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Syntax(e)
    }
}

type Res<T> = Result<T, CliError>;

const BUILTINS: &[(&str, &str)] = &[
    ("sym", "sym(n)"),
    ("alt", "alt(n)"),
    ("cyclic", "cyclic(n)"),
    ("dihedral", "dihedral(n)"),
    ("quaternion", "quaternion()"),
    ("affine", "affine(q)"),
    ("semidirect", "semidirect(n, m, r)"),
    ("prod", "prod(G, H)"),
    ("quotient", "quotient(H)"),
    ("center", "center(G)"),
    ("parent", "parent(H)"),
    ("sylow", "sylow(G, p)"),
    ("sylowreport", "sylowreport(G, p)"),
    ("normalizer", "normalizer(H)"),
    ("conjssub", "conjssub(H)"),
    ("isnormal", "isnormal(H)"),
    ("selfaction", "selfaction(G)"),
    ("conjugacy", "conjugacy(G)"),
    ("cosetaction", "cosetaction(H)"),
    ("conjsubaction", "conjsubaction(H)"),
    ("orbit", "orbit(point, A)"),
    ("orbits", "orbits(A)"),
    ("stabilizer", "stabilizer(point, A)"),
    ("actsym", "actsym(A)"),
    ("kernel", "kernel(M)"),
    ("order", "order(G | H | perm)"),
    ("index", "index(H)"),
    ("classes", "classes(G)"),
    ("lens", "lens(list)"),
    ("elements", "elements(G | H)"),
    ("perms", "perms(G | H)"),
    ("parity", "parity(perm)"),
    ("translist", "translist(perm)"),
    ("compose", "compose(perm, perm)"),
    ("invert", "invert(perm)"),
    ("simple?", "simple?(G)"),
    ("normalsub", "normalsub(G)"),
    ("load", "load(path)"),
    ("save", "save(G, path)"),
    ("loadaction", "loadaction(path)"),
    ("saveaction", "saveaction(A, path)"),
];

/// Usage strings of every builtin, for help output.
pub fn builtin_signatures() -> impl Iterator<Item = &'static str> {
    BUILTINS.iter().map(|(_, s)| *s)
}

pub struct Context {
    limits: Limits,
}

impl Context {
    pub fn new(limits: Limits) -> Self {
        Context { limits }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn eval_str(&self, src: &str) -> Res<Value> {
        self.eval(&parse(src)?)
    }

    pub fn eval(&self, e: &Expr) -> Res<Value> {
        match e {
            Expr::Nat(n) => Ok(Value::Nat(*n)),
            Expr::Perm(v) => Perm::new(v.clone())
                .map(Value::Perm)
                .map_err(|err| CliError::Engine("permutation literal".into(), err)),
            Expr::Ident(name) => Err(CliError::Usage(format!(
                "unknown identifier `{name}` (bare names are only accepted as paths and element labels)"
            ))),
            Expr::Call(name, args) => self.call(name, args, e),
        }
    }

    fn call(&self, name: &str, args: &[Expr], whole: &Expr) -> Res<Value> {
        let Some(&(_, signature)) = BUILTINS.iter().find(|(n, _)| *n == name) else {
            return Err(CliError::Usage(format!("unknown builtin `{name}`")));
        };
        let call = Call {
            ctx: self,
            name,
            signature,
            args,
        };
        let origin = whole.to_string();
        let engine = |e: gt_core::Error| CliError::Engine(name.to_string(), e);
        let limits = &self.limits;
        match name {
            "sym" => {
                call.arity(1)?;
                let s = sym_group_with(call.nat(0)?, limits).map_err(engine)?;
                Ok(Value::Group(s.group().clone(), origin))
            }
            "alt" => {
                call.arity(1)?;
                let a = alt_group_with(call.nat(0)?, limits).map_err(engine)?;
                Ok(Value::Subgroup(a, origin))
            }
            "cyclic" => {
                call.arity(1)?;
                let n = call.nat(0)?;
                if n == 0 {
                    return Err(call.bad(0, "a positive order"));
                }
                limits.check_order(n).map_err(engine)?;
                Ok(Value::Group(cyclic_group(n), origin))
            }
            "dihedral" => {
                call.arity(1)?;
                let n = call.nat(0)?;
                if n < 3 {
                    return Err(call.bad(0, "n >= 3"));
                }
                limits.check_order(n.saturating_mul(2)).map_err(engine)?;
                Ok(Value::Group(dihedral_group(n), origin))
            }
            "quaternion" => {
                call.arity(0)?;
                Ok(Value::Group(quaternion_group(), origin))
            }
            "affine" => {
                call.arity(1)?;
                let q = call.nat(0)?;
                limits.check_order(q.saturating_mul(q.saturating_sub(1))).map_err(engine)?;
                Ok(Value::Group(affine_group(q).map_err(engine)?, origin))
            }
            "semidirect" => {
                call.arity(3)?;
                let (n, m, r) = (call.nat(0)?, call.nat(1)?, call.nat(2)?);
                limits.check_order(n.saturating_mul(m)).map_err(engine)?;
                Ok(Value::Group(semidirect_cyclic(n, m, r).map_err(engine)?, origin))
            }
            "prod" => {
                call.arity(2)?;
                let (g, h) = (call.group(0)?, call.group(1)?);
                limits.check_order(g.order().saturating_mul(h.order())).map_err(engine)?;
                Ok(Value::Group(direct_product(&g, &h), origin))
            }
            "quotient" => {
                let h = call.subgroup_in(0)?;
                Ok(Value::Group(h.quotient().map_err(engine)?, origin))
            }
            "parent" => {
                call.arity(1)?;
                let (h, _) = call.subgroup_with_origin(0)?;
                Ok(Value::Group(h.parent().clone(), origin))
            }
            "center" => {
                call.arity(1)?;
                Ok(Value::Subgroup(call.group(0)?.center(), origin))
            }
            "sylow" => {
                call.arity(2)?;
                let (g, p) = (call.group(0)?, call.prime(1)?);
                Ok(Value::Subgroup(sylow_subgroup(&g, p).map_err(engine)?, origin))
            }
            "sylowreport" => {
                call.arity(2)?;
                let (g, p) = (call.group(0)?, call.prime(1)?);
                Ok(Value::Report(sylow_report(&g, p).map_err(engine)?))
            }
            "normalizer" => Ok(Value::Subgroup(normalizer(&call.subgroup_in(0)?), origin)),
            "conjssub" => Ok(Value::SubgroupList(conjs_sub(&call.subgroup_in(0)?))),
            "isnormal" => Ok(Value::Bool(call.subgroup_in(0)?.is_normal())),
            "index" => Ok(Value::Nat(call.subgroup_in(0)?.index())),
            "selfaction" => {
                call.arity(1)?;
                let (g, gref) = call.group_with_origin(0)?;
                let a = self_action(&g).map_domain(|&s| g.label(s).to_string()).map_err(engine)?;
                Ok(Value::Action(a, gref))
            }
            "conjugacy" => {
                call.arity(1)?;
                let (g, gref) = call.group_with_origin(0)?;
                let a = conjugacy_action(&g).map_domain(|&s| g.label(s).to_string()).map_err(engine)?;
                Ok(Value::Action(a, gref))
            }
            "cosetaction" => {
                call.arity(1)?;
                let (h, href) = call.subgroup_with_origin(0)?;
                let g = h.parent().clone();
                // cosets are named by their least member
                let a = lcoset_action(&h)
                    .map_domain(|c| g.label(c.representative()).to_string())
                    .map_err(engine)?;
                Ok(Value::Action(a, parent_ref(&href)))
            }
            "conjsubaction" => {
                call.arity(1)?;
                let (h, href) = call.subgroup_with_origin(0)?;
                let g = h.parent().clone();
                // conjugates are named by their least conjugating element
                let base = conj_sub_action(&h);
                let names: Vec<String> = (0..base.degree())
                    .map(|i| base.actor_of_index(i, 0).map(|a| g.label(a).to_string()))
                    .collect::<Result<_, _>>()
                    .map_err(engine)?;
                let a = base
                    .map_domain(|c| names[base.index_of(c).expect("c is in the domain")].clone())
                    .map_err(engine)?;
                Ok(Value::Action(a, parent_ref(&href)))
            }
            "orbit" => {
                call.arity(2)?;
                let (a, _) = call.action(1)?;
                let s = call.point(0, &a)?;
                Ok(Value::Points(a.orbit(&s).map_err(engine)?))
            }
            "orbits" => {
                call.arity(1)?;
                let (a, _) = call.action(0)?;
                let os = a
                    .orbits()
                    .into_iter()
                    .map(|o| o.into_iter().map(|i| a.domain()[i].clone()).collect())
                    .collect();
                Ok(Value::Orbits(os))
            }
            "stabilizer" => {
                call.arity(2)?;
                let (a, _) = call.action(1)?;
                let s = call.point(0, &a)?;
                Ok(Value::Subgroup(a.stabilizer(&s).map_err(engine)?, origin))
            }
            "actsym" => {
                call.arity(1)?;
                Ok(Value::Map(call.action(0)?.0.act_sym()))
            }
            "kernel" => {
                call.arity(1)?;
                match call.value(0)? {
                    Value::Map(m) => Ok(Value::Subgroup(m.kernel().map_err(engine)?, origin)),
                    other => Err(call.bad_kind(0, "map", &other)),
                }
            }
            "order" => {
                call.arity(1)?;
                match call.value(0)? {
                    Value::Perm(p) => Ok(Value::Nat(perm_order(&p))),
                    Value::Subgroup(h, _) => Ok(Value::Nat(h.order())),
                    Value::Group(g, _) => Ok(Value::Nat(g.order())),
                    other => Err(call.bad_kind(0, "group, subgroup or permutation", &other)),
                }
            }
            "classes" => {
                call.arity(1)?;
                Ok(Value::Classes(call.group(0)?.conjugacy_classes()))
            }
            "lens" => {
                call.arity(1)?;
                let lens = match call.value(0)? {
                    Value::Classes(cs) => cs.iter().map(Vec::len).collect(),
                    Value::SubgroupList(hs) => hs.iter().map(Subgroup::order).collect(),
                    Value::Orbits(os) => os.iter().map(Vec::len).collect(),
                    Value::PermList(ps) => ps.iter().map(Perm::degree).collect(),
                    other => return Err(call.bad_kind(0, "list of lists", &other)),
                };
                Ok(Value::IntList(lens))
            }
            "elements" => {
                call.arity(1)?;
                match call.value(0)? {
                    Value::Subgroup(h, _) => Ok(Value::IntList(h.elements().to_vec())),
                    Value::Group(g, _) => Ok(Value::IntList(g.elements().collect())),
                    other => Err(call.bad_kind(0, "group or subgroup", &other)),
                }
            }
            "perms" => {
                call.arity(1)?;
                let (g, members): (Group, Vec<usize>) = match call.value(0)? {
                    Value::Subgroup(h, _) => (h.parent().clone(), h.elements().to_vec()),
                    Value::Group(g, _) => (g.clone(), g.elements().collect()),
                    other => return Err(call.bad_kind(0, "group or subgroup", &other)),
                };
                let perms = members
                    .iter()
                    .map(|&x| g.label(x).parse::<Perm>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| call.bad(0, "a permutation group (element labels must be permutations)"))?;
                Ok(Value::PermList(perms))
            }
            "parity" => {
                call.arity(1)?;
                Ok(Value::Nat(call.perm(0)?.parity() as usize))
            }
            "translist" => {
                call.arity(1)?;
                Ok(Value::PermList(call.perm(0)?.trans_list()))
            }
            "compose" => {
                call.arity(2)?;
                let (x, y) = (call.perm(0)?, call.perm(1)?);
                Ok(Value::Perm(x.compose(&y).map_err(engine)?))
            }
            "invert" => {
                call.arity(1)?;
                Ok(Value::Perm(call.perm(0)?.inverse()))
            }
            "simple?" => {
                call.arity(1)?;
                Ok(Value::Verdict(simplicity(&call.group(0)?).map_err(engine)?))
            }
            "normalsub" => {
                call.arity(1)?;
                Ok(Value::Subgroup(normal_subgroup(&call.group(0)?).map_err(engine)?, origin))
            }
            "load" => {
                call.arity(1)?;
                let path = call.path(0)?;
                Ok(Value::Group(load_group(&path, limits).map_err(engine)?, origin))
            }
            "save" => {
                call.arity(2)?;
                let g = call.group(0)?;
                let path = call.path(1)?;
                save_group(&g, &path).map_err(engine)?;
                Ok(Value::Saved(path))
            }
            "loadaction" => {
                call.arity(1)?;
                let path = call.path(0)?;
                let text = std::fs::read_to_string(&path).map_err(|e| engine(e.into()))?;
                let file = ActionFile::parse(&text).map_err(engine)?;
                let gref = file.group_ref.clone();
                let g = match self.eval(&parse(&gref)?)? {
                    Value::Group(g, _) => g,
                    Value::Subgroup(h, _) => h.group().clone(),
                    other => {
                        return Err(CliError::Usage(format!(
                            "loadaction: group reference `{gref}` evaluates to a {}",
                            other.kind()
                        )))
                    }
                };
                Ok(Value::Action(file.into_action(&g).map_err(engine)?, gref))
            }
            "saveaction" => {
                call.arity(2)?;
                let (a, gref) = call.action(0)?;
                let path = call.path(1)?;
                let text = write_action(&a, &gref, String::clone).map_err(engine)?;
                std::fs::write(&path, text).map_err(|e| engine(e.into()))?;
                Ok(Value::Saved(path))
            }
            _ => unreachable!("builtin table and dispatch disagree on `{name}`"),
        }
    }
}

/// The expression naming the parent of the subgroup given by `href`.
fn parent_ref(href: &str) -> String {
    format!("parent({href})")
}

fn perm_order(p: &Perm) -> usize {
    let mut q = p.clone();
    let mut k = 1;
    while !q.is_identity() {
        q = q.compose(p).expect("same degree");
        k += 1;
    }
    k
}

struct Call<'a> {
    ctx: &'a Context,
    name: &'a str,
    signature: &'static str,
    args: &'a [Expr],
}

impl Call<'_> {
    fn arity(&self, n: usize) -> Res<()> {
        if self.args.len() != n {
            return Err(CliError::Usage(format!(
                "{}: expects {n} argument{}, found {} (usage: {})",
                self.name,
                if n == 1 { "" } else { "s" },
                self.args.len(),
                self.signature
            )));
        }
        Ok(())
    }

    fn bad(&self, i: usize, expected: &str) -> CliError {
        CliError::Usage(format!("{}: argument {} must be {expected}", self.name, i + 1))
    }

    fn bad_kind(&self, i: usize, expected: &str, found: &Value) -> CliError {
        CliError::Usage(format!(
            "{}: argument {} must be a {expected}, found a {}",
            self.name,
            i + 1,
            found.kind()
        ))
    }

    fn value(&self, i: usize) -> Res<Value> {
        if let Expr::Ident(id) = &self.args[i] {
            return Err(CliError::Usage(format!(
                "{}: argument {}: unknown identifier `{id}`",
                self.name,
                i + 1
            )));
        }
        self.ctx.eval(&self.args[i])
    }

    fn nat(&self, i: usize) -> Res<usize> {
        match self.value(i)? {
            Value::Nat(n) => Ok(n),
            other => Err(self.bad_kind(i, "natural number", &other)),
        }
    }

    fn prime(&self, i: usize) -> Res<usize> {
        let p = self.nat(i)?;
        if !is_prime(p) {
            return Err(self.bad(i, "a prime"));
        }
        Ok(p)
    }

    fn perm(&self, i: usize) -> Res<Perm> {
        match self.value(i)? {
            Value::Perm(p) => Ok(p),
            other => Err(self.bad_kind(i, "permutation", &other)),
        }
    }

    /// A group; subgroups stand for their induced group.
    fn group_with_origin(&self, i: usize) -> Res<(Group, String)> {
        match self.value(i)? {
            Value::Group(g, o) => Ok((g, o)),
            Value::Subgroup(h, o) => Ok((h.group().clone(), o)),
            other => Err(self.bad_kind(i, "group", &other)),
        }
    }

    fn group(&self, i: usize) -> Res<Group> {
        self.group_with_origin(i).map(|(g, _)| g)
    }

    /// A subgroup; a group stands for itself as a subgroup.
    fn subgroup_with_origin(&self, i: usize) -> Res<(Subgroup, String)> {
        match self.value(i)? {
            Value::Subgroup(h, o) => Ok((h, o)),
            Value::Group(g, o) => Ok((Subgroup::whole(&g), o)),
            other => Err(self.bad_kind(i, "subgroup", &other)),
        }
    }

    /// `f(H)` or `f(H, G)`; the optional group must be `H`'s parent.
    fn subgroup_in(&self, i: usize) -> Res<Subgroup> {
        if self.args.len() != i + 1 && self.args.len() != i + 2 {
            return Err(CliError::Usage(format!(
                "{}: expects 1 or 2 arguments, found {} (usage: {})",
                self.name,
                self.args.len(),
                self.signature
            )));
        }
        let (h, _) = self.subgroup_with_origin(i)?;
        if self.args.len() == i + 2 {
            let g = self.group(i + 1)?;
            if &g != h.parent() {
                return Err(self.bad(i + 1, "the parent group of argument 1"));
            }
        }
        Ok(h)
    }

    fn action(&self, i: usize) -> Res<(GroupAction<String>, String)> {
        match self.value(i)? {
            Value::Action(a, o) => Ok((a, o)),
            other => Err(self.bad_kind(i, "action", &other)),
        }
    }

    /// A domain point: a number, permutation or bare label, matched against
    /// the action's point names.
    fn point(&self, i: usize, a: &GroupAction<String>) -> Res<String> {
        let token = match &self.args[i] {
            Expr::Ident(s) => s.clone(),
            Expr::Nat(n) => n.to_string(),
            Expr::Perm(v) => Perm::new(v.clone())
                .map_err(|e| CliError::Engine(self.name.to_string(), e))?
                .token(),
            _ => return Err(self.bad(i, "a domain point (number, permutation or label)")),
        };
        if !a.contains(&token) {
            return Err(CliError::Usage(format!(
                "{}: `{token}` is not a point of the action's domain",
                self.name
            )));
        }
        Ok(token)
    }

    fn path(&self, i: usize) -> Res<String> {
        match &self.args[i] {
            Expr::Ident(s) => Ok(s.clone()),
            _ => Err(self.bad(i, "a file path")),
        }
    }
}
