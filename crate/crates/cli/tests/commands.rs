use std::process::{Command, Output};

fn gt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gt"))
        .args(args)
        .env_remove("GT_MAX_ORDER")
        .output()
        .expect("gt runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn eval_prints_values() {
    let o = gt(&["eval", "order(sym(4))"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "24\n");
    let o = gt(&["eval", "simple?(alt(4))"]);
    assert_eq!(stdout(&o), "not-simple witness-order=4 method=ppq\n");
    let o = gt(&["eval", "order(alt(5))"]);
    assert_eq!(stdout(&o), "60\n");
}

#[test]
fn user_errors_exit_1() {
    let o = gt(&["eval", "normalsub(cyclic(7))"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("prime order has no proper normal subgroup"));
    assert!(o.stdout.is_empty());

    let o = gt(&["eval", "sym(5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("offset 5"));

    let o = gt(&["eval", "sym(1, 2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("sym: expects 1 argument, found 2"));

    let o = gt(&["eval", "parity(cyclic(3))"]);
    assert!(stderr(&o).contains("parity: argument 1 must be a permutation, found a group"));

    let o = gt(&["eval", "load(/nonexistent/file.grp)"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn theorem_violations_map_to_exit_2() {
    let e = gt_cli::CliError::Engine("x".into(), gt_core::Error::TheoremViolation("bug".into()));
    assert_eq!(e.exit_code(), 2);
    let e = gt_cli::CliError::Engine("x".into(), gt_core::Error::PrimeOrder(7));
    assert_eq!(e.exit_code(), 1);
}

#[test]
fn size_caps() {
    let o = gt(&["eval", "order(sym(7))"]);
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_gt"))
        .args(["eval", "order(cyclic(11))"])
        .env("GT_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceeds"));
    let o = Command::new(env!("CARGO_BIN_EXE_gt"))
        .args(["--force-large", "eval", "order(cyclic(11))"])
        .env("GT_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "11\n");
    let o = Command::new(env!("CARGO_BIN_EXE_gt"))
        .args(["eval", "order(sym(5))"])
        .env("GT_MAX_ORDER", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_gt"))
        .args(["eval", "1"])
        .env("GT_MAX_ORDER", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn repl_reads_lines_until_quit() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_gt"))
        .arg("repl")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"order(sym(3))\n\nparity([1 0 2])\n:quit\norder(sym(4))\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "6\n1\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn batch_stops_at_first_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("script.gt");
    std::fs::write(&file, "order(cyclic(5))\nnormalsub(cyclic(5))\norder(sym(3))\n").unwrap();
    let o = gt(&["batch", file.to_str().unwrap()]);
    assert_eq!(stdout(&o), "5\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classify_sweep_covers_composite_orders() {
    let o = gt(&["classify-under-60"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut orders = std::collections::BTreeSet::new();
    for line in out.lines() {
        let mut words = line.split(' ');
        let n: usize = words.next().unwrap().parse().unwrap();
        orders.insert(n);
        let witness = line.split("witness-order=").nth(1).unwrap();
        let k: usize = witness.split(' ').next().unwrap().parse().unwrap();
        assert!(k > 1 && k < n && n.is_multiple_of(k), "{line}");
    }
    let composite: std::collections::BTreeSet<usize> =
        (4..60).filter(|&n| !gt_core::arith::is_prime(n)).collect();
    assert_eq!(orders, composite);
}

#[test]
fn files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (i, expr) in ["cyclic(30)", "alt(4)", "prod(cyclic(2), sym(3))", "quaternion()"].iter().enumerate() {
        let a = dir.path().join(format!("g{i}.grp"));
        let b = dir.path().join(format!("h{i}.grp"));
        let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
        assert_eq!(gt(&["eval", &format!("save({expr}, {a})")]).status.code(), Some(0));
        assert_eq!(gt(&["eval", &format!("save(load({a}), {b})")]).status.code(), Some(0));
        assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap(), "{expr}");
    }
}

#[test]
fn normal_subgroup_of_loaded_group() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z30.grp");
    std::fs::write(&path, gt_core::io::write_group(&gt_core::generators::cyclic_group(30))).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_gt"))
        .current_dir(dir.path())
        .args(["eval", "normalsub(load(z30.grp))"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let k: usize = out.split("order=").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap();
    assert_eq!(30 % k, 0);
}

#[test]
fn fmt_normalizes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("messy.grp");
    std::fs::write(&path, "GROUPFILE   1\n\norder 2\nelems  e  x\ntable\n0   1\n 1 0\n").unwrap();
    let p = path.to_str().unwrap();
    let o = gt(&["fmt", p]);
    assert_eq!(stdout(&o), "GROUPFILE 1\norder 2\nelems e x\ntable\n0 1\n1 0\n");
    assert_eq!(gt(&["fmt", "-i", p]).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&o));
    std::fs::write(&path, "GROUPFILE 1\norder 2\nelems e x\ntable\n0 1\n1 1\n").unwrap();
    assert_eq!(gt(&["fmt", p]).status.code(), Some(1));
}

#[test]
fn action_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.act");
    let b = dir.path().join("b.act");
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    let o = gt(&["eval", &format!("saveaction(conjsubaction(sylow(sym(4), 2)), {a})")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = gt(&["eval", &format!("saveaction(loadaction({a}), {b})")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    let o = gt(&["eval", &format!("orbits(loadaction({a}))")]);
    assert_eq!(stdout(&o).matches('{').count(), 1);
}
