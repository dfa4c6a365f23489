//! One handler per subcommand. Each builds a JSON value and a text rendering;
//! `--format` picks which is printed.

use std::fmt::Write as _;

use gsym_core::spectral::eigen_sym;
use gsym_core::{Error, Graph, GraphFamily, ProductKind};
use gsym_knots::{gram_det, gram_matrix, jones_polynomial, meander_det, Basis, BraidWord};
use gsym_measures::{
    ade_t_series, check_t_series, circular_measure, loop_counts, moments_match, spectral_measure, DensityLaw,
};
use gsym_quantum::quantum_flag;
use gsym_symmetry::{
    automorphism_group, character_stats, count_partial_perms, orbitals, orbits, oriented_cycle, partial_automorphisms,
    partial_automorphisms_of, partial_counts_cycle, table_n_le_11, verify_product_theorem,
};
use gsym_trees::{
    count_labeled_trees, prufer_decode, prufer_encode, spanning::DELETION_CONTRACTION_CAP, spanning_tree_count,
    LabeledTree, PruferSeq, SpanningMethod,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::corpus::{run_all, select, Corpus};
use crate::graphs::{parse_family, read_edge_list};
use crate::{Cli, Command, Failure, Format, KnotsCmd, MeasuresCmd, Source, SymCmd, TreesCmd};

/// Default truncation for loop counts and series.
pub const DEFAULT_ORDER: usize = 12;
/// Partial automorphisms are enumerated up to this many vertices.
const PARTIAL_LISTING_CAP: usize = 6;

type Out = Result<(Value, String), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Family strings and files are user input: failures to read them are usage
/// errors, not contract errors.
fn family(text: &str) -> Result<GraphFamily, Failure> {
    parse_family(text).map_err(|e| usage(e.to_string()))
}

fn load(source: &Source) -> Result<(Graph, Option<GraphFamily>), Failure> {
    match (&source.family, &source.file) {
        (Some(f), None) => {
            let fam = family(f)?;
            Ok((fam.build()?, Some(fam)))
        }
        (None, Some(path)) => Ok((read_edge_list(path).map_err(|e| usage(e.to_string()))?, None)),
        _ => Err(usage("give exactly one of --family and --file")),
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn shift(v: &[usize], one_based: bool) -> Vec<usize> {
    v.iter().map(|x| x + usize::from(one_based)).collect()
}

pub fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let result = match &cli.command {
        Command::Spectrum(src) => spectrum(cli, src),
        Command::Measures(cmd) => measures(cli, cmd),
        Command::Trees(cmd) => trees(cli, cmd),
        Command::Sym(cmd) => sym(cli, cmd),
        Command::Qflag { graph, file } => {
            let source = Source { family: graph.clone(), file: file.clone() };
            qflag(&source)
        }
        Command::Knots(cmd) => knots(cmd),
        Command::Corpus { filter, timings } => return corpus(cli, filter.as_deref(), *timings),
    };
    let (value, text) = result?;
    Ok(render(cli.format, &value, text))
}

fn render(format: Format, value: &Value, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("values serialize") + "\n",
        Format::Text => text,
    }
}

fn spectrum(cli: &Cli, src: &Source) -> Out {
    let (g, _) = load(src)?;
    let d = eigen_sym(&g.adjacency().to_matrix(), cli.tol)?;
    let mut text = String::new();
    for (l, m) in d.eigenvalues.iter().zip(&d.multiplicities) {
        writeln!(text, "{l:>14.9}  x{m}").expect("write to String");
    }
    Ok((serde_json::to_value(&d).expect("serializable"), text))
}

fn measures(cli: &Cli, cmd: &MeasuresCmd) -> Out {
    let order = cli.order.unwrap_or(DEFAULT_ORDER);
    match cmd {
        MeasuresCmd::Loops { source, root } => {
            let (g, _) = load(source)?;
            let root = root.or(g.root()).unwrap_or(0);
            let loops = loop_counts(&g, root, order)?;
            let mu = spectral_measure(&g, root)?;
            let matches = moments_match(&mu, &loops, 1e-6);
            let value = json!({
                "loops": strings(&loops),
                "atoms": mu.atoms(),
                "weights": mu.weights(),
                "match": matches,
            });
            let text = format!("loops: {}\natoms: {}\nmatch: {matches}\n", join(&loops), mu.atoms().len());
            Ok((value, text))
        }
        MeasuresCmd::Tseries { source } => {
            let (g, fam) = load(source)?;
            let expected = match fam {
                Some(GraphFamily::Ade(tag, size)) => ade_t_series(tag, size),
                _ => None,
            };
            let r = check_t_series(&g, order, expected.as_ref())?;
            let text = format!(
                "theta: {}\nt_series: {}\nmatch: {}\n",
                join(r.theta.coeffs()),
                join(r.t_series.coeffs()),
                r.matches.map_or("n/a".to_string(), |m| m.to_string())
            );
            Ok((serde_json::to_value(&r).expect("serializable"), text))
        }
        MeasuresCmd::Law { law, points } => {
            let law: DensityLaw = law.parse().map_err(|e: Error| usage(e.to_string()))?;
            let k_max = order.min(gsym_measures::laws::MAX_MOMENT as usize);
            let moments: Vec<f64> = (0..=k_max as u32).map(|k| law.moment(k)).collect::<Result<_, _>>()?;
            let oracle: Vec<String> = (0..=k_max).map(|k| law.oracle_moment(k).to_string()).collect();
            let (lo, hi) = law.support();
            let table: Vec<(f64, f64)> = (1..=*points)
                .map(|j| {
                    let x = lo + (hi - lo) * j as f64 / (*points + 1) as f64;
                    (x, law.density(x))
                })
                .collect();
            let mut text = format!("moments: {}\n", join(&oracle));
            for (x, y) in &table {
                writeln!(text, "{x:>8.4} {y:.9}").expect("write to String");
            }
            Ok((json!({ "law": law, "moments": moments, "oracle": oracle, "density": table }), text))
        }
        MeasuresCmd::Circular { source } => {
            let (g, _) = load(source)?;
            let eps = circular_measure(&g)?;
            let text = format!("angles: {}\nweights: {}\n", join(eps.atoms()), join(eps.weights()));
            Ok((json!({ "atoms": eps.atoms(), "weights": eps.weights() }), text))
        }
    }
}

fn trees(cli: &Cli, cmd: &TreesCmd) -> Out {
    let ob = cli.one_based;
    match cmd {
        TreesCmd::PruferEncode(src) => {
            let (g, _) = load(src)?;
            let s = prufer_encode(&LabeledTree::from_graph(&g)?)?;
            let values = shift(s.values(), ob);
            Ok((json!({ "n": s.n(), "sequence": values, "one_based": ob }), format!("{}\n", join(&values))))
        }
        TreesCmd::PruferDecode { sequence, n } => {
            let mut values = Vec::new();
            for tok in sequence.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| usage(format!("bad sequence entry `{tok}`")))?;
                values.push(if ob {
                    v.checked_sub(1).ok_or_else(|| usage("one-based labels start at 1"))?
                } else {
                    v
                });
            }
            let n = n.unwrap_or(values.len() + 2);
            let t = prufer_decode(&PruferSeq::new(n, values)?);
            let edges: Vec<(usize, usize)> =
                t.edges().iter().map(|&(a, b)| (a + usize::from(ob), b + usize::from(ob))).collect();
            let text = edges.iter().map(|(a, b)| format!("{a} {b}\n")).collect();
            Ok((json!({ "n": n, "edges": edges, "one_based": ob }), text))
        }
        TreesCmd::Count { n } => {
            let c = count_labeled_trees(*n)?;
            Ok((json!({ "n": n, "count": c.to_string(), "method": "cayley" }), format!("{c}\n")))
        }
        TreesCmd::Spanning { source, method } => {
            let (g, _) = load(source)?;
            let method: SpanningMethod = method.parse().map_err(|e: Error| usage(e.to_string()))?;
            let requested = spanning_tree_count(&g, method)?;
            let exact = spanning_tree_count(&g, SpanningMethod::Cofactor)?.exact.expect("cofactor is exact");
            let mut checks = serde_json::Map::new();
            if g.edge_count() <= DELETION_CONTRACTION_CAP {
                let dc = spanning_tree_count(&g, SpanningMethod::DeletionContraction)?.exact.expect("exact");
                checks.insert("deletion_contraction".into(), json!(dc.to_string()));
            }
            checks.insert("spectral".into(), json!(spanning_tree_count(&g, SpanningMethod::Spectral)?.value));
            let value = json!({
                "count": exact.to_string(),
                "method": "cofactor",
                "requested": requested,
                "checks": checks,
            });
            let text = format!(
                "{exact}\n{method}: {}\n",
                requested.exact.map_or(requested.value.to_string(), |e| e.to_string())
            );
            Ok((value, text))
        }
    }
}

fn sym(cli: &Cli, cmd: &SymCmd) -> Out {
    let ob = cli.one_based;
    match cmd {
        SymCmd::Aut(src) => {
            let (g, _) = load(src)?;
            let grp = automorphism_group(&g)?;
            let gens: Vec<Vec<usize>> = grp.generators.iter().map(|p| shift(p.images(), ob)).collect();
            let mut text = format!("order {}\n", grp.order);
            for p in &gens {
                writeln!(text, "  {}", join(p)).expect("write to String");
            }
            Ok((json!({ "n": g.n(), "order": grp.order.to_string(), "generators": gens }), text))
        }
        SymCmd::Orbits(src) => {
            let (g, _) = load(src)?;
            let orb: Vec<Vec<usize>> = orbits(&automorphism_group(&g)?).iter().map(|o| shift(o, ob)).collect();
            let text = orb.iter().map(|o| format!("{{{}}}\n", join(o))).collect();
            Ok((json!({ "orbits": orb }), text))
        }
        SymCmd::Orbitals(src) => {
            let (g, _) = load(src)?;
            let o = orbitals(&automorphism_group(&g)?);
            let rows: Vec<Vec<usize>> = (0..o.n).map(|i| (0..o.n).map(|j| o.class(i, j)).collect()).collect();
            let text = format!("{} orbitals\n", o.count) + &rows.iter().map(|r| join(r) + "\n").collect::<String>();
            Ok((json!({ "count": o.count, "classes": rows }), text))
        }
        SymCmd::Table => {
            let rows = table_n_le_11()?;
            let mut text = String::new();
            let mut out = Vec::new();
            for r in &rows {
                let status = if r.matches { "ok" } else { "mismatch" };
                writeln!(
                    text,
                    "{:<8} {:<14} {:>10} {:>10}  {status}",
                    r.label,
                    r.group.to_string(),
                    r.expected_order,
                    r.computed_order
                )
                .expect("write to String");
                out.push(json!({
                    "label": r.label,
                    "family": r.family,
                    "group": r.group.to_string(),
                    "expected": r.expected_order.to_string(),
                    "computed": r.computed_order.to_string(),
                    "status": status,
                }));
            }
            let all_ok = rows.iter().all(|r| r.matches);
            Ok((json!({ "rows": out, "all_ok": all_ok }), text))
        }
        SymCmd::Partial { n } => {
            let mut value = json!({
                "n": n,
                "partial_perms": count_partial_perms(*n).to_string(),
                "oriented_formula": partial_counts_cycle(*n, true)?.to_string(),
                "unoriented_formula": partial_counts_cycle(*n, false)?.to_string(),
            });
            if (3..=PARTIAL_LISTING_CAP).contains(n) {
                value["oriented_enumerated"] = json!(partial_automorphisms_of(&oriented_cycle(*n))?.len().to_string());
                value["unoriented_enumerated"] =
                    json!(partial_automorphisms(&GraphFamily::C(*n).build()?)?.len().to_string());
            }
            let text = value
                .as_object()
                .expect("object")
                .iter()
                .map(|(k, v)| format!("{k}: {}\n", v.as_str().map_or(v.to_string(), str::to_string)))
                .collect();
            Ok((value, text))
        }
        SymCmd::Characters { n, moments } => {
            let s = character_stats(*n, *moments)?;
            let value = serde_json::to_value(&s).expect("serializable");
            let text = format!(
                "derangement probability {}\nfixed-point moments {}\n",
                s.derangement_prob,
                join(&s.fixed_point_moments)
            );
            Ok((value, text))
        }
        SymCmd::Product { left, right, kind } => {
            let kind: ProductKind = kind.parse().map_err(|e: Error| usage(e.to_string()))?;
            let (x, y) = (family(left)?.build()?, family(right)?.build()?);
            let r = verify_product_theorem(&x, &y, kind)?;
            let text = format!(
                "conditions {}\n|G(X)||G(Y)| = {}\n|G| = {}\n",
                r.conditions_hold.map_or("n/a".to_string(), |c| c.to_string()),
                r.order_product,
                r.order_actual
            );
            Ok((serde_json::to_value(&r).expect("serializable"), text))
        }
    }
}

fn qflag(source: &Source) -> Out {
    let (g, _) = load(source)?;
    let f = quantum_flag(&g)?;
    let value = json!({
        "verdict": f.verdict,
        "rule": f.rule,
        "reason": f.reason,
        "certificate": f.certificate,
    });
    Ok((value, format!("{:?} ({}): {}\n", f.verdict, f.rule, f.reason)))
}

fn knots(cmd: &KnotsCmd) -> Out {
    match cmd {
        KnotsCmd::Jones { strands, word } => {
            let beta = BraidWord::parse(*strands, word).map_err(|e| usage(e.to_string()))?;
            let v = jones_polynomial(&beta)?;
            Ok((json!({ "braid": beta.to_string(), "poly": v, "text": v.to_string() }), format!("{v}\n")))
        }
        KnotsCmd::Gram { basis, k, n } => {
            let basis: Basis = basis.parse().map_err(|e: Error| usage(e.to_string()))?;
            let n = BigInt::from(*n);
            let g = gram_matrix(basis, *k, &n)?;
            let det = gram_det(basis, *k, &n)?;
            let rows: Vec<Vec<String>> = g.iter().map(|r| strings(r)).collect();
            let text = rows.iter().map(|r| r.join(" ") + "\n").collect::<String>() + &format!("det {det}\n");
            Ok((json!({ "basis": basis, "k": k, "n": n.to_string(), "matrix": rows, "det": det.to_string() }), text))
        }
        KnotsCmd::Meander { basis, k, n } => {
            let basis: Basis = basis.parse().map_err(|e: Error| usage(e.to_string()))?;
            let n = BigInt::from(*n);
            let (product, direct) = (meander_det(basis, *k, &n)?, gram_det(basis, *k, &n)?);
            let matches = product == direct;
            let value = json!({
                "basis": basis,
                "k": k,
                "n": n.to_string(),
                "product": product.to_string(),
                "direct": direct.to_string(),
                "match": matches,
            });
            Ok((value, format!("product {product}\ndirect {direct}\nmatch {matches}\n")))
        }
    }
}

fn corpus(cli: &Cli, filter: Option<&str>, timings: bool) -> Result<String, Failure> {
    let selected = select(filter);
    if selected.is_empty() {
        return Err(usage(format!("no criterion matches `{}`", filter.unwrap_or(""))));
    }
    let corpus = Corpus { seed: cli.seed, ..Corpus::default() };
    let report = run_all(&selected, &corpus, timings);
    let text: String = report.criteria.iter().map(|r| r.line() + "\n").collect();
    let out = render(cli.format, &serde_json::to_value(&report).expect("serializable"), text);
    if report.pass {
        Ok(out)
    } else {
        Err(Failure::Reported(out, format!("failed criteria: {}", report.failed.join(", "))))
    }
}
