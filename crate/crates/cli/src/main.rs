use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mongraph::algmap::AlgebraicMap;
use mongraph::enumeration::{build_census, standard_labelling};
use mongraph::error::{Error, ErrorKind};
use mongraph::families::{parse_generator_list, GroupSpec};
use mongraph::group::{FiniteGroup, Subgroup, DEFAULT_BOUND};
use mongraph::monodromy::{arc_transitive_companion, MonodromyGraph};
use mongraph::multigraph::Multigraph;
use mongraph::perm::Permutation;
use mongraph::representation::monodromy_representation;
use mongraph::verify::verify_group;

#[derive(Parser)]
#[command(name = "mongraph", version, about = "Monodromy graphs and algebraic maps of permutation groups")]
struct Cli {
    /// Largest group order to enumerate.
    #[arg(long, global = true, env = "MONGRAPH_BOUND", default_value_t = DEFAULT_BOUND)]
    bound: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build Mon(G; U, rho, tau).
    Mon {
        #[command(flatten)]
        quad: Quadruple,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the DOT or JSON artifact here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the algebraic map M(G; U, rho, tau) and report its counts.
    Map {
        #[command(flatten)]
        quad: Quadruple,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all maps of a group up to isomorphism.
    Census {
        group: String,
        /// List planarity of every cell.
        #[arg(long)]
        planar_atlas: bool,
        /// Write census/<group>/<Ui>_<pairj>.dot under this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Exclude tau = 1.
        #[arg(long)]
        require_involution: bool,
    },
    /// Run the property suites against a group.
    Verify {
        group: String,
        #[arg(long, requires = "tau")]
        rho: Option<String>,
        #[arg(long, requires = "rho")]
        tau: Option<String>,
    },
    /// Represent a graph (JSON) as a monodromy graph.
    Represent {
        file: PathBuf,
        /// JSON array with the cyclic dart order at each vertex.
        #[arg(long)]
        rotation: Option<PathBuf>,
        /// Also build Mon(G; 1, rho, tau) and check arc-transitivity.
        #[arg(long)]
        companion: bool,
    },
}

#[derive(clap::Args)]
struct Quadruple {
    /// S<n>, A<n>, C<n>, D<2n>, or generators such as "(1,2,3);(1,2)".
    group: String,
    /// Generators of U separated by ';'; empty for the trivial subgroup.
    subgroup: String,
    rho: String,
    tau: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Parse => 2,
                ErrorKind::Precondition => 3,
                ErrorKind::Bound => 4,
                ErrorKind::Internal => 5,
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let bound = cli.bound;
    match cli.command {
        Command::Mon { quad, format, out } => cmd_mon(&quad, format, out, bound),
        Command::Map { quad, json } => cmd_map(&quad, json, bound),
        Command::Census {
            group,
            planar_atlas,
            out,
            json,
            require_involution,
        } => cmd_census(&group, planar_atlas, out, json, require_involution, bound),
        Command::Verify { group, rho, tau } => cmd_verify(&group, rho.zip(tau), bound),
        Command::Represent {
            file,
            rotation,
            companion,
        } => cmd_represent(&file, rotation, companion, bound),
    }
}

struct Loaded {
    spec: GroupSpec,
    group: FiniteGroup,
    subgroup: Subgroup,
    rho: Permutation,
    tau: Permutation,
}

fn load_group(text: &str, bound: usize) -> CliResult<(GroupSpec, FiniteGroup)> {
    let spec = GroupSpec::parse(text)?;
    let group = spec.build(bound)?;
    Ok((spec, group))
}

fn load(quad: &Quadruple, bound: usize) -> CliResult<Loaded> {
    let (spec, group) = load_group(&quad.group, bound)?;
    let degree = Some(group.degree());
    let gens = parse_generator_list(&quad.subgroup, degree)?;
    let subgroup = group.subgroup_from_perms(&gens)?;
    Ok(Loaded {
        rho: Permutation::parse(&quad.rho, degree)?,
        tau: Permutation::parse(&quad.tau, degree)?,
        spec,
        group,
        subgroup,
    })
}

fn cmd_mon(quad: &Quadruple, format: Format, out: Option<PathBuf>, bound: usize) -> CliResult<ExitCode> {
    let l = load(quad, bound)?;
    let mon = MonodromyGraph::build(&l.group, &l.subgroup, &l.rho, &l.tau)?;
    let artifact = match format {
        Format::Text => None,
        Format::Dot => Some(mon.graph().to_dot()),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&mon.to_json(&l.spec.to_string())).expect("serializable");
            s.push('\n');
            Some(s)
        }
    };
    match (artifact, out) {
        (Some(a), Some(path)) => {
            fs::write(path, a)?;
            print!("{}", mon_summary(&mon));
        }
        (Some(a), None) => print!("{a}"),
        (None, _) => print!("{}", mon_summary(&mon)),
    }
    Ok(ExitCode::SUCCESS)
}

fn mon_summary(mon: &MonodromyGraph) -> String {
    let g = mon.graph();
    let mut s = format!(
        "vertices={} edges={} loops={} free={}\n",
        g.vertex_count(),
        g.ordinary_edge_count(),
        g.total_loops(),
        g.total_free_edges()
    );
    if !mon.is_core_free() {
        s.push_str("warning: U has nontrivial core\n");
    }
    s.push_str("vertex degree valency loops free\n");
    for (v, block) in mon.double_cosets().blocks().iter().enumerate() {
        s.push_str(&format!(
            "{} {} {} {} {}\n",
            g.label(v),
            g.degree(v),
            mon.valency_indexed(block.representative),
            g.loop_count(v),
            g.free_edge_count(v)
        ));
    }
    s
}

fn cmd_map(quad: &Quadruple, json: bool, bound: usize) -> CliResult<ExitCode> {
    let l = load(quad, bound)?;
    let map = AlgebraicMap::build(&l.group, &l.subgroup, &l.rho, &l.tau)?;
    let counts = map.counts();
    let structure = map.structure_predicates()?;
    if json {
        let value = serde_json::json!({
            "group": l.spec.to_string(),
            "counts": counts,
            "structure": structure,
            "regular": map.is_regular(),
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        let genus = counts.genus.map_or_else(|| "undefined (free edges)".to_string(), |g| g.to_string());
        println!(
            "darts={} V={} E={} F={} euler={} genus={}",
            counts.darts, counts.vertices, counts.edges, counts.faces, counts.euler, genus
        );
        println!(
            "free_edges={} loops={} multiple_edges={} simple={} regular={}",
            structure.has_free_edges,
            structure.has_loops,
            structure.has_multiple_edges,
            structure.is_simple,
            map.is_regular()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_census(
    group: &str,
    planar_atlas: bool,
    out: Option<PathBuf>,
    json: bool,
    require_involution: bool,
    bound: usize,
) -> CliResult<ExitCode> {
    let (spec, g) = load_group(group, bound)?;
    let name: String = spec
        .to_string()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    let labelling = standard_labelling(&spec);
    let census = build_census(&g, &name, labelling.as_ref(), require_involution)?;
    if json {
        print!("{}", census.to_json());
    } else {
        print!("{}", census.to_table());
    }
    if planar_atlas && !json {
        for e in census.planar_atlas() {
            println!("atlas {} {} {}", e.subgroup, e.pair, if e.planar { "planar" } else { "nonplanar" });
        }
    }
    if let Some(dir) = out {
        let written = census.write_dot_tree(&dir)?;
        eprintln!("wrote {} DOT files under {}", written.len(), dir.join("census").join(&name).display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(group: &str, pair: Option<(String, String)>, bound: usize) -> CliResult<ExitCode> {
    let (_, g) = load_group(group, bound)?;
    let pair = match pair {
        Some((r, t)) => {
            let p = |s: &str| -> CliResult<usize> { Ok(g.locate(&Permutation::parse(s, Some(g.degree()))?)?) };
            Some((p(&r)?, p(&t)?))
        }
        None => None,
    };
    let report = verify_group(&g, pair)?;
    for line in report.lines() {
        println!("{line}");
    }
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(5))
    }
}

fn cmd_represent(file: &PathBuf, rotation: Option<PathBuf>, companion: bool, bound: usize) -> CliResult<ExitCode> {
    let sigma = Multigraph::from_json(&fs::read_to_string(file)?)?;
    let rotation: Option<Vec<Vec<usize>>> = match rotation {
        Some(path) => Some(serde_json::from_str(&fs::read_to_string(path)?).map_err(|e| Error::Parse(e.to_string()))?),
        None => None,
    };
    let r = monodromy_representation(&sigma, rotation.as_deref(), bound)?;
    let g = &r.group;
    println!("order={} darts={}", g.order(), r.darts.len());
    println!("rho={}", g.element(r.rho));
    println!("tau={}", g.element(r.tau));
    let gens: Vec<String> = r.stabilizer.generators(g).iter().map(|&x| g.element(x).to_string()).collect();
    println!("U=<{}> order={}", gens.join("; "), r.stabilizer.order());
    for (v, &w) in r.certificate.iter().enumerate() {
        println!("{} -> {}", sigma.label(v), r.monodromy.graph().label(w));
    }
    let iso = r.round_trip_isomorphic(&sigma)?;
    println!("certificate {}", if iso { "OK" } else { "FAILED" });
    if companion {
        let c = arc_transitive_companion(g, g.element(r.rho), g.element(r.tau))?;
        let auts = c.left_automorphisms()?;
        println!(
            "companion vertices={} edges={} arc_transitive={}",
            c.graph().vertex_count(),
            c.graph().ordinary_edge_count(),
            auts.is_arc_transitive()
        );
    }
    Ok(if iso { ExitCode::SUCCESS } else { ExitCode::from(5) })
}
