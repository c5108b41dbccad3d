use std::fmt::Write as _;
use std::path::Path;

use chain_algebra::{parse_chain, Chain, XSet};
use cocycle_lib::{parse_triple_points, weight_sum, ThreeCocycle};
use cycle_lab::boundary::catalogue;
use cycle_lab::{
    check_cycle, kernel_fg, search_min_cycles, verify_named_cycle, CaseProfile, Certificate, CycleReport, IndexFilter,
    KernelListing, NamedCycle, SearchConfig, SearchOutcome, SliceBasis,
};
use quandle_core::{is_octahedral, parse_table, Elem, FiniteQuandle, OCTAHEDRAL_DUAL_ISO};
use serde_json::{json, Value};
use term_structure::{enumerate_f_connected, index_pattern_tables};

use crate::args::*;
use crate::{CliError, Report};

pub fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Quandle(a) => quandle(a),
        Command::Cocycle { action } => cocycle(action),
        Command::Enumerate { action } => enumerate(action),
        Command::Kernel(a) => kernel(a),
        Command::Search(a) => search(a, cli.threads),
        Command::Verify { action } => verify(action),
        Command::Weight(a) => weight(a),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Non-comment, non-blank lines.
fn golden_lines(path: &Path) -> Result<Vec<String>, CliError> {
    Ok(read(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect())
}

fn load_quandle(src: &QuandleSource) -> Result<FiniteQuandle, CliError> {
    match (src.family, &src.table) {
        (Some(FamilyName::Octahedral), None) => Ok(FiniteQuandle::octahedral()),
        (Some(FamilyName::Dihedral), None) => {
            let n = src.n.ok_or_else(|| CliError::Usage("--family dihedral needs --n".into()))?;
            Ok(FiniteQuandle::dihedral(n)?)
        }
        (None, Some(path)) => {
            let name = path.file_stem().map_or("table".into(), |s| s.to_string_lossy().into_owned());
            Ok(parse_table(&name, &read(path)?)?)
        }
        (None, None) => Err(CliError::Usage("give --family or --table".into())),
        (Some(_), Some(_)) => Err(CliError::Usage("--family and --table exclude each other".into())),
    }
}

fn load_cocycle(name: CocycleName, n: Option<usize>) -> Result<ThreeCocycle, CliError> {
    Ok(match name {
        CocycleName::Mochizuki | CocycleName::Zeta => ThreeCocycle::mochizuki(n.unwrap_or(7))?,
        CocycleName::Eta => {
            if n.is_some_and(|n| n != 6) {
                return Err(CliError::Usage("eta lives on O6; drop --n".into()));
            }
            ThreeCocycle::octahedral_eta()?
        }
    })
}

fn chain_json(c: &Chain) -> Value {
    let graded = c.x_set() == XSet::Graded;
    let terms: Vec<Value> = c
        .iter()
        .map(|(t, k)| {
            if graded {
                json!({"coeff": k, "degree": t.degree, "index": t.index, "colors": t.colors.as_slice()})
            } else {
                json!({"coeff": k, "colors": t.colors.as_slice()})
            }
        })
        .collect();
    json!({"arity": c.arity(), "x_set": c.x_set().keyword(), "length": c.length(), "terms": terms})
}

fn table_json(q: &FiniteQuandle) -> Value {
    json!({"name": q.name(), "order": q.size(), "rows": q.rows()})
}

fn quandle(a: &QuandleArgs) -> Result<Report, CliError> {
    let q = load_quandle(&a.source)?;
    match &a.action {
        QuandleAction::PrintTable => Ok(Report::new(q.to_string(), table_json(&q), true)),
        QuandleAction::Check => {
            let r = q.check_axioms();
            let mut text = format!("{}: {} checks, {}", q.name(), r.checked, if r.passed() { "pass" } else { "FAIL" });
            for v in &r.violations {
                write!(text, "\n{v}").unwrap();
            }
            let violations: Vec<String> = r.violations.iter().map(ToString::to_string).collect();
            let json = json!({"quandle": q.name(), "checked": r.checked, "passed": r.passed(), "violations": violations});
            Ok(Report::new(text, json, r.passed()))
        }
        QuandleAction::Dual { map } => {
            let dual = q.dual()?;
            let map: Vec<Elem> = match map {
                Some(s) => s
                    .split(',')
                    .map(|x| x.trim().parse::<Elem>().map_err(|_| CliError::Usage(format!("bad map entry {x:?}"))))
                    .collect::<Result<_, _>>()?,
                None if is_octahedral(&q) => OCTAHEDRAL_DUAL_ISO.to_vec(),
                None => q.elements().collect(),
            };
            let iso = q.is_isomorphism_to(&map, &dual)?;
            let text = format!("{}# map {:?} is {}an isomorphism onto the dual", dual, map, if iso { "" } else { "not " });
            let json = json!({"dual": table_json(&dual), "map": map, "isomorphism": iso});
            Ok(Report::new(text, json, iso))
        }
        QuandleAction::Table1 { base, compare } => {
            if !q.contains(*base as usize) {
                return Err(CliError::Usage(format!("base {base} is not in {}", q.name())));
            }
            let rows: Vec<String> =
                q.base_point_table(*base).iter().map(|((a, b, c), r)| format!("{a} {b} {c} {r}")).collect();
            let mut text = format!("# a b c -> {base}^{{a b c}} in {}\n{}", q.name(), rows.join("\n"));
            let mut json = json!({"quandle": q.name(), "base": base, "rows": rows.len(), "entries": rows});
            let ok = match compare {
                Some(path) => compare_lines(&rows, &golden_lines(path)?, &mut text, &mut json),
                None => true,
            };
            Ok(Report::new(text, json, ok))
        }
    }
}

/// Appends a comparison verdict and the first differences.
fn compare_lines(mine: &[String], golden: &[String], text: &mut String, json: &mut Value) -> bool {
    let ok = mine == golden;
    let missing: Vec<&String> = golden.iter().filter(|g| !mine.contains(g)).collect();
    let extra: Vec<&String> = mine.iter().filter(|m| !golden.contains(m)).collect();
    write!(text, "\n# compare: {} of {} rows, {}", mine.len(), golden.len(), if ok { "match" } else { "MISMATCH" }).unwrap();
    for m in missing.iter().take(10) {
        write!(text, "\n- {m}").unwrap();
    }
    for e in extra.iter().take(10) {
        write!(text, "\n+ {e}").unwrap();
    }
    json["compare"] = json!({"match": ok, "missing": missing, "extra": extra});
    ok
}

fn cocycle(action: &CocycleAction) -> Result<Report, CliError> {
    match action {
        CocycleAction::Verify(sel) => {
            let theta = load_cocycle(sel.name, sel.n)?;
            let r = theta.verify_cocycle_condition()?;
            let mut text = format!(
                "{} mod {} on {}: {} arity-4 generators, {}",
                theta.name(),
                theta.modulus(),
                theta.quandle().name(),
                r.checked,
                if r.passed() { "pass" } else { "FAIL" }
            );
            for (g, v) in r.failures.iter().take(10) {
                write!(text, "\nboundary of {g:?} pairs to {v}").unwrap();
            }
            let failures: Vec<Value> = r.failures.iter().map(|(g, v)| json!({"generator": g, "value": v})).collect();
            let json = json!({"cocycle": theta.name(), "modulus": theta.modulus(), "checked": r.checked,
                "passed": r.passed(), "failures": failures});
            Ok(Report::new(text, json, r.passed()))
        }
        CocycleAction::Eval { cocycle, chain } => {
            let theta = load_cocycle(cocycle.name, cocycle.n)?;
            let c = parse_chain(&read(chain)?)?;
            let value = theta.evaluate(&c.project_pi())?;
            let text = format!("{value}");
            let json = json!({"cocycle": theta.name(), "modulus": theta.modulus(), "value": value});
            Ok(Report::new(text, json, true))
        }
    }
}

fn enumerate(action: &EnumerateAction) -> Result<Report, CliError> {
    match action {
        EnumerateAction::Families { k } => {
            let ts = enumerate_f_connected(*k)?;
            let mut text = format!("# {} f-connected templates of size {k}", ts.len());
            for t in &ts {
                write!(text, "\n{} {}", t.id, t.notation()).unwrap();
            }
            let list: Vec<Value> = ts.iter().map(|t| json!({"id": t.id, "notation": t.notation()})).collect();
            Ok(Report::new(text, json!({"k": k, "count": ts.len(), "templates": list}), true))
        }
        EnumerateAction::IndexTables { k, compare } => {
            let rows = index_pattern_tables(&FiniteQuandle::octahedral(), *k)?;
            // at size 5 the single-group rows are implied by the others
            let listed: Vec<String> =
                rows.iter().filter(|r| *k != 5 || r.shape != [5]).map(ToString::to_string).collect();
            let mut text = format!("# no shape case u b c d | result\n{}", listed.join("\n"));
            let mut json = json!({"k": k, "rows": listed});
            let ok = match compare {
                Some(path) => compare_lines(&listed, &golden_lines(path)?, &mut text, &mut json),
                None => true,
            };
            Ok(Report::new(text, json, ok))
        }
    }
}

fn kernel(a: &KernelArgs) -> Result<Report, CliError> {
    let q = load_quandle(&a.source)?;
    let index = match a.index.as_str() {
        "all" => IndexFilter::All,
        s => IndexFilter::One(s.parse().map_err(|_| CliError::Usage(format!("--index takes an element or all, got {s:?}")))?),
    };
    let slice = SliceBasis::new(&q, a.degree, index, a.terminal)?;
    let k = kernel_fg(&slice);
    let basis = match a.basis {
        BasisKind::Lattice => &k.lattice,
        BasisKind::Rational => &k.rational,
    };
    let text = format!(
        "# kernel of f and g on {} generators of degree {}\n# rank {}\n{}",
        slice.generators().len(),
        a.degree,
        k.rank(),
        KernelListing { slice: &slice, basis }
    );
    let chains: Vec<Value> = basis.iter().map(|v| slice.chain_of(v).map(|c| chain_json(&c))).collect::<Result<_, _>>()?;
    let json = json!({"quandle": q.name(), "degree": a.degree, "generators": slice.generators().len(),
        "rank": k.rank(), "basis": chains});
    Ok(Report::new(text, json, true))
}

fn certificate_json(c: &Certificate) -> Value {
    json!({
        "scope": c.scope(), "quandle": c.quandle, "cocycle": c.cocycle, "modulus": c.modulus,
        "profile": c.profile.label(), "max_length": c.max_length, "budget": c.budget, "roots": c.roots,
        "term_space": c.term_space, "estimated_nodes": c.estimated_nodes.round() as u64, "probes": c.probes,
        "cycles_by_length": c.cycles_by_length, "nonzero_cycles": c.nonzero,
    })
}

fn search(a: &SearchArgs, threads: usize) -> Result<Report, CliError> {
    let theta = load_cocycle(a.cocycle.name, a.cocycle.n)?;
    let profile = CaseProfile::parse(&a.profile)
        .ok_or_else(|| CliError::Usage(format!("--profile takes A, B or C, got {:?}", a.profile)))?;
    let mut cfg = SearchConfig::new(theta, profile, a.max_length);
    cfg.threads = threads;
    cfg.stop_at_first = a.stop_at_first;
    if let Some(b) = a.budget {
        cfg.budget = b;
    }
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(match search_min_cycles(&cfg)? {
        SearchOutcome::Found { cycles, certificate } => {
            let mut text = String::new();
            for f in &cycles {
                writeln!(text, "# cycle of length {} with value {}\n{}", f.chain.length(), f.value, f.chain).unwrap();
            }
            write!(text, "{certificate}").unwrap();
            let list: Vec<Value> =
                cycles.iter().map(|f| json!({"value": f.value, "chain": chain_json(&f.chain)})).collect();
            let json = json!({"outcome": "found", "cycles": list, "certificate": certificate_json(&certificate)});
            Report::new(text, json, true)
        }
        SearchOutcome::Exhausted(c) => {
            let json = json!({"outcome": "exhausted", "cycles": [], "certificate": certificate_json(&c)});
            Report::new(c.to_string(), json, true)
        }
        SearchOutcome::Refused(r) => {
            let json = json!({"outcome": "refused", "covered_roots": r.covered_roots, "spent": r.spent,
                "certificate": certificate_json(&r.partial)});
            Report::new(r.to_string(), json, false)
        }
    })
}

fn cycle_json(r: &CycleReport) -> Value {
    json!({"name": r.name, "cycle": r.is_cycle(), "length": r.length, "expected_length": r.expected_length,
        "value": r.value, "expected_value": r.expected_value, "modulus": r.modulus, "passed": r.passed(),
        "residual": chain_json(&r.residual)})
}

fn verify(action: &VerifyAction) -> Result<Report, CliError> {
    match action {
        VerifyAction::Cycles { names, chain, cocycle, length, value } => {
            let mut reports = Vec::new();
            if let Some(path) = chain {
                let name = cocycle.name.ok_or_else(|| CliError::Usage("--chain needs --name".into()))?;
                let theta = load_cocycle(name, cocycle.n)?;
                let c = parse_chain(&read(path)?)?;
                let (len, val) = (length.expect("required by clap"), value.expect("required by clap"));
                reports.push(check_cycle(&path.display().to_string(), &c, &theta, len, val)?);
            }
            let named: Vec<NamedCycle> = if names.is_empty() && chain.is_none() {
                NamedCycle::all().to_vec()
            } else {
                names
                    .iter()
                    .map(|s| NamedCycle::parse(s).ok_or_else(|| CliError::Usage(format!("unknown cycle {s:?}"))))
                    .collect::<Result<_, _>>()?
            };
            for n in named {
                reports.push(verify_named_cycle(n)?);
            }
            let ok = reports.iter().all(CycleReport::passed);
            let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            let json = json!({"passed": ok, "cycles": reports.iter().map(cycle_json).collect::<Vec<_>>()});
            Ok(Report::new(text, json, ok))
        }
        VerifyAction::Boundary { only } => {
            let ids: Vec<_> =
                catalogue().into_iter().filter(|id| only.as_ref().map_or(true, |p| id.name.starts_with(p))).collect();
            if ids.is_empty() {
                return Err(CliError::Usage(format!("no identity matches {only:?}")));
            }
            let mut reports = Vec::new();
            for id in &ids {
                reports.push((id, id.check()?));
            }
            let ok = reports.iter().all(|(_, r)| r.passed());
            let text = reports.iter().map(|(_, r)| r.to_string()).collect::<Vec<_>>().join("\n");
            let list: Vec<Value> = reports
                .iter()
                .map(|(id, r)| {
                    json!({"name": r.name, "sign": id.sign, "instances": r.instances, "failures": r.failures,
                        "passed": r.passed()})
                })
                .collect();
            Ok(Report::new(text, json!({"passed": ok, "identities": list}), ok))
        }
    }
}

fn weight(a: &WeightArgs) -> Result<Report, CliError> {
    let n = match (a.cocycle, a.n, a.modulus) {
        (CocycleName::Mochizuki | CocycleName::Zeta, None, Some(m)) => Some(m as usize),
        (_, n, _) => n,
    };
    let theta = load_cocycle(a.cocycle, n)?;
    if let Some(m) = a.modulus {
        if m != theta.modulus() {
            return Err(CliError::Usage(format!("{} is taken mod {}, not {m}", theta.name(), theta.modulus())));
        }
    }
    let points = parse_triple_points(&read(&a.points)?)?;
    let w = weight_sum(&theta, &points)?;
    let ok = a.expect.map_or(true, |e| e == w);
    let mut text = format!("{w}");
    if !ok {
        write!(text, "\n# expected {}", a.expect.unwrap_or_default()).unwrap();
    }
    let json = json!({"cocycle": theta.name(), "modulus": theta.modulus(), "points": points.len(), "weight": w,
        "expected": a.expect, "passed": ok});
    Ok(Report::new(text, json, ok))
}
