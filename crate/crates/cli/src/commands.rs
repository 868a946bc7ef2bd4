use std::fmt::Display;
use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use mwdp_core::apps::{self, PolymatrixGame};
use mwdp_core::graph::{ColoredGraph, UndirectedGraph, WeightedDigraph};
use mwdp_core::reductions::{self, GadgetReport, Hypergraph3};
use mwdp_core::{
    build_cut_graph, classify, exhaustive_with_separator, rational, solve_with, Error, Instance,
    Matrix2x2, SolveOptions, Strategy,
};
use serde_json::{json, Value};

use crate::output::{self, r};
use crate::{AppCommand, Cli, Command, MaxcutArgs, ReduceCommand, SolveArgs, MethodArg};

pub struct Failure {
    pub context: String,
    pub message: String,
    pub code: u8,
}

fn code_of(e: &Error) -> u8 {
    if e.is_too_large() {
        3
    } else if e.is_internal() {
        1
    } else {
        2
    }
}

/// Names the subcommand and the file (or flag) an error came from.
struct Ctx {
    command: &'static str,
    source: String,
}

impl Ctx {
    fn new(command: &'static str, source: impl Display) -> Self {
        Self {
            command,
            source: source.to_string(),
        }
    }

    fn fail(&self, message: impl Display, code: u8) -> Failure {
        Failure {
            context: format!("{}: {}", self.command, self.source),
            message: message.to_string(),
            code,
        }
    }

    fn core<T>(&self, r: Result<T, Error>) -> Result<T, Failure> {
        r.map_err(|e| self.fail(&e, code_of(&e)))
    }

    fn read(&self, path: &Path) -> Result<String, Failure> {
        fs::read_to_string(path).map_err(|e| {
            let what = if e.kind() == ErrorKind::NotFound {
                "file not found".to_string()
            } else {
                format!("cannot read file: {e}")
            };
            Ctx::new(self.command, path.display()).fail(what, 2)
        })
    }

    fn write(&self, path: &Path, text: &str) -> Result<(), Failure> {
        fs::write(path, format!("{text}\n"))
            .map_err(|e| Ctx::new(self.command, path.display()).fail(format!("cannot write file: {e}"), 2))
    }

    fn matrix(&self, flag: &str, text: &str) -> Result<Matrix2x2, Failure> {
        Matrix2x2::parse(text).map_err(|e| Ctx::new(self.command, format!("--{flag}")).fail(e, 2))
    }

    fn rational(&self, flag: &str, text: &str) -> Result<rational::Rational, Failure> {
        rational::parse(text).map_err(|e| Ctx::new(self.command, format!("--{flag}")).fail(e, 2))
    }
}

pub fn run(cli: &Cli) -> Result<Value, Failure> {
    let options = SolveOptions {
        brute_force_cap: cli.cap,
    };
    match &cli.command {
        Command::Classify(a) => {
            let ctx = Ctx::new("classify", a.input.display());
            let instance = ctx.core(Instance::from_json_str(&ctx.read(&a.input)?))?;
            let verdict = ctx.core(classify(instance.family()))?;
            Ok(output::verdict(&verdict))
        }
        Command::Solve(a) => solve(a, &options),
        Command::Reduce(c) => reduce(c, &options),
        Command::App(c) => app(c, &options),
    }
}

fn solve(a: &SolveArgs, options: &SolveOptions) -> Result<Value, Failure> {
    let ctx = Ctx::new("solve", a.input.display());
    let instance = ctx.core(Instance::from_json_str(&ctx.read(&a.input)?))?;
    let verdict = ctx.core(classify(instance.family()))?;
    if let Some(path) = &a.emit_cutgraph {
        let graph = ctx.core(build_cut_graph(&instance))?;
        ctx.write(path, &output::pretty(&output::cut_graph(&instance, &graph)))?;
    }
    let strategy = match a.method {
        MethodArg::Auto => Strategy::Auto,
        MethodArg::Mincut => Strategy::MinCut,
        MethodArg::TrivialB => Strategy::TrivialB,
        MethodArg::TrivialC => Strategy::TrivialC,
        MethodArg::Brute => Strategy::BruteForce,
        MethodArg::Local => Strategy::LocalSearch {
            seed: a.seed,
            restarts: a.restarts,
        },
    };
    let sol = ctx.core(solve_with(&instance, strategy, options))?;
    let mut out = output::solution(&instance, &sol);
    out["case"] = output::verdict(&verdict)["case"].clone();
    Ok(out)
}

fn emit_instance(ctx: &Ctx, instance: &Instance, path: Option<&Path>, out: &mut Value) -> Result<(), Failure> {
    let text = instance.to_json_string();
    match path {
        Some(p) => ctx.write(p, &text)?,
        None => out["instance"] = serde_json::from_str(&text).expect("instance JSON parses"),
    }
    out["vertices"] = json!(instance.num_vertices());
    out["arcs"] = json!(instance.arcs().len());
    Ok(())
}

fn maxcut(a: &MaxcutArgs, bc: bool, options: &SolveOptions) -> Result<Value, Failure> {
    let ctx = Ctx::new(if bc { "reduce maxcut-bc" } else { "reduce maxcut-ba" }, a.input.display());
    let g = ctx.core(UndirectedGraph::from_json_str(&ctx.read(&a.input)?))?;
    let m = ctx.matrix("m", &a.m)?;
    let rr = ctx.matrix("r", &a.r)?;
    let build = if bc {
        reductions::maxcut_to_mwop_bc
    } else {
        reductions::maxcut_to_mwop_ba
    };
    let (instance, report) = ctx.core(build(&g, &m, &rr))?;
    let mut out = json!({ "report": report.to_json(), "edges": g.edges.len() });
    if let Some(p) = &a.report {
        ctx.write(p, &output::pretty(&report.to_json()))?;
    }
    emit_instance(&ctx, &instance, a.output.as_deref(), &mut out)?;
    if a.solve {
        // gadgets only touch their own edge's endpoints, so fixing the graph
        // vertices splits the rest into small independent pieces
        let separator: Vec<usize> = (0..g.num_vertices()).collect();
        let sol = ctx.core(exhaustive_with_separator(&instance, &separator, options.brute_force_cap))?;
        let cut = ctx.core(reductions::recover_maxcut(&sol.weight, &report, g.edges.len()))?;
        out["optimum"] = r(&sol.weight);
        out["maxcut"] = json!(cut);
        out["cut"] = output::partition(&g.vertices, &sol.partition);
    }
    Ok(out)
}

fn reduce(c: &ReduceCommand, options: &SolveOptions) -> Result<Value, Failure> {
    match c {
        ReduceCommand::Hyp2col {
            input,
            matrix,
            output: out_path,
            report,
        } => {
            let ctx = Ctx::new("reduce hyp2col", input.display());
            let h = ctx.core(Hypergraph3::from_json_str(&ctx.read(input)?))?;
            let m = ctx.matrix("matrix", matrix)?;
            let (instance, threshold, rep) = ctx.core(reductions::hypergraph_to_mwop(&h, &m))?;
            let mut out = json!({ "threshold": r(&threshold), "report": rep.to_json() });
            if let Some(p) = report {
                ctx.write(p, &output::pretty(&rep.to_json()))?;
            }
            emit_instance(&ctx, &instance, out_path.as_deref(), &mut out)?;
            Ok(out)
        }
        ReduceCommand::MaxcutBc(a) => maxcut(a, true, options),
        ReduceCommand::MaxcutBa(a) => maxcut(a, false, options),
        ReduceCommand::Symmetrize { input, output: out_path } => {
            let ctx = Ctx::new("reduce symmetrize", input.display());
            let instance = ctx.core(Instance::from_json_str(&ctx.read(input)?))?;
            let sym = ctx.core(reductions::mwop_to_mwsdp(&instance))?;
            let mut out = json!({ "kind": sym.kind().name() });
            emit_instance(&ctx, &sym, out_path.as_deref(), &mut out)?;
            Ok(out)
        }
        ReduceCommand::Linearize { input, output: out_path } => {
            let ctx = Ctx::new("reduce linearize", input.display());
            let h = ctx.core(Hypergraph3::from_json_str(&ctx.read(input)?))?;
            let lin = reductions::make_linear(&h);
            let mut out = json!({
                "vertices": lin.num_vertices(),
                "edges": lin.edges.len(),
                "changed": lin != h,
            });
            match out_path {
                Some(p) => ctx.write(p, &output::pretty(&lin.to_json()))?,
                None => out["hypergraph"] = lin.to_json(),
            }
            Ok(out)
        }
        ReduceCommand::RecoverMaxcut { report, weight, edges } => {
            let ctx = Ctx::new("reduce recover-maxcut", report.display());
            let doc: Value = serde_json::from_str(&ctx.read(report)?).map_err(|e| ctx.fail(e, 2))?;
            let rep = ctx.core(GadgetReport::from_json(&doc))?;
            let w = ctx.rational("weight", weight)?;
            let cut = ctx.core(reductions::recover_maxcut(&w, &rep, *edges))?;
            Ok(json!({ "maxcut": cut }))
        }
    }
}

fn app(c: &AppCommand, options: &SolveOptions) -> Result<Value, Failure> {
    match c {
        AppCommand::Game(a) => {
            let ctx = Ctx::new("app game", a.input.display());
            let game = ctx.core(PolymatrixGame::from_json_str(&ctx.read(&a.input)?))?;
            let best = ctx.core(apps::max_welfare(&game, options))?;
            let actions: serde_json::Map<String, Value> = game
                .players
                .iter()
                .zip(&best.profile.actions)
                .map(|(p, a)| (p.clone(), serde_json::to_value(a).expect("action serializes")))
                .collect();
            Ok(json!({
                "welfare": r(&best.welfare),
                "profile": actions,
                "verdict": output::verdict(&best.verdict),
                "method": best.method,
            }))
        }
        AppCommand::Mad { input, k } => {
            let ctx = Ctx::new("app mad", input.display());
            let g = ctx.core(UndirectedGraph::from_json_str(&ctx.read(input)?))?;
            match k {
                Some(k) => {
                    let k = ctx.rational("k", k)?;
                    let (answer, witness) = ctx.core(apps::mad_decide(&g, &k))?;
                    Ok(json!({
                        "k": r(&k),
                        "exceeds": answer,
                        "witness": witness.map(|w| output::ids(&g.vertices, w)),
                    }))
                }
                None => {
                    let (mad, witness) = ctx.core(apps::mad_exact(&g))?;
                    Ok(json!({ "mad": r(&mad), "witness": output::ids(&g.vertices, witness) }))
                }
            }
        }
        AppCommand::Colorpart(a) => {
            let ctx = Ctx::new("app colorpart", a.input.display());
            let g = ctx.core(ColoredGraph::from_json_str(&ctx.read(&a.input)?))?;
            let (p, value) = ctx.core(apps::two_color_partition(&g))?;
            let mut out = output::partition(&g.vertices, &p);
            out["value"] = r(&value);
            Ok(out)
        }
        AppCommand::Colordiff(a) => {
            let ctx = Ctx::new("app colordiff", a.input.display());
            let g = ctx.core(ColoredGraph::from_json_str(&ctx.read(&a.input)?))?;
            let (x, value) = ctx.core(apps::two_color_difference(&g, options.brute_force_cap))?;
            Ok(json!({ "subset": output::ids(&g.vertices, x), "value": r(&value) }))
        }
        AppCommand::Balance(a) => {
            let ctx = Ctx::new("app balance", a.input.display());
            let d = ctx.core(WeightedDigraph::from_json_str(&ctx.read(&a.input)?))?;
            let (r_plus, p) = ctx.core(apps::balance_defect(&d))?;
            let mut out = output::partition(&d.vertices, &p);
            out["r_plus"] = r(&r_plus);
            Ok(out)
        }
        AppCommand::Stcut { input, s, t } => {
            let ctx = Ctx::new("app stcut", input.display());
            let d = ctx.core(WeightedDigraph::from_json_str(&ctx.read(input)?))?;
            let (cut, p) = ctx.core(apps::min_st_cut_via_mwdp(&d, s, t))?;
            let mut out = output::partition(&d.vertices, &p);
            out["cut_size"] = json!(cut);
            Ok(out)
        }
        AppCommand::Dicut(a) => {
            let ctx = Ctx::new("app dicut", a.input.display());
            let d = ctx.core(WeightedDigraph::from_json_str(&ctx.read(&a.input)?))?;
            let (value, p) = ctx.core(apps::max_weighted_dicut(&d, options.brute_force_cap))?;
            let mut out = output::partition(&d.vertices, &p);
            out["value"] = r(&value);
            Ok(out)
        }
    }
}
