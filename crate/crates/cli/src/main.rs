use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use kanlab::boxes::{box_projection, check_geom_box, enumerate_boxes, member_face, nerve, realize};
use kanlab::codiscrete::{codiscrete_interval, minimal_interval};
use kanlab::cubeset::geometric_of_algebraic;
use kanlab::fib::{
    check_fib_section, check_fib_uniform, codiscrete_fib_table, is_kan_fibration,
    synthesize_uniform_fib, terminal_fib_table, transport,
};
use kanlab::io;
use kanlab::kan::{check_section, check_uniform, codiscrete_table, is_kan, synthesize_uniform};
use kanlab::{
    BoxShape, CubicalMap, FibAlgBox, FillingTable, FiniteCubicalSet, GeomBox, KanVerdict, MorphKey,
    Synthesis,
};

const EXIT_VALIDATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "kanlab", version, about = "Check cubical sets, open boxes and Kan filling")]
struct Cli {
    /// Truncation bound for built-in sets.
    #[arg(long, global = true, env = "KANLAB_BOUND", default_value_t = 2)]
    bound: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the carriers of a built-in interval.
    Interval {
        kind: IntervalKind,
        /// Write a DOT graph of the cubes up to dimension 2.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Validate a cubical-set or map file.
    Check { path: PathBuf },
    /// Decide the Kan condition, check or synthesize a uniform filling.
    Kan {
        path: Option<PathBuf>,
        #[arg(long)]
        builtin: Option<Builtin>,
        /// Check uniformity of a filling table.
        #[arg(long)]
        uniform: bool,
        /// Search for a uniform filling table.
        #[arg(long)]
        synthesize: bool,
        /// A filling table to check instead of the built-in one.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Where to write a synthesized table.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check nerve and realization, and box projections, on every box.
    Roundtrip {
        path: Option<PathBuf>,
        #[arg(long)]
        builtin: Option<Builtin>,
    },
    /// Move a point along a line of the base of a fibration.
    Transport {
        map: Option<PathBuf>,
        table: Option<PathBuf>,
        #[arg(long)]
        builtin: Option<FibBuiltin>,
        /// Label of the line in the base.
        #[arg(long)]
        line: String,
        /// Label of the starting point in the total space.
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Decide the fibration condition for a map.
    FibCheck {
        path: Option<PathBuf>,
        #[arg(long)]
        builtin: Option<FibBuiltin>,
        #[arg(long)]
        synthesize: bool,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum IntervalKind {
    Minimal,
    Codiscrete,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Builtin {
    MinimalInterval,
    CodiscreteInterval,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FibBuiltin {
    /// The map from the minimal interval to a point.
    MinimalInterval,
    /// The map from the codiscrete interval to a point.
    CodiscreteInterval,
    /// The codiscrete nerve on `a0, a1` over the codiscrete interval.
    Relabel,
}

fn builtin_set(b: Builtin, bound: usize) -> Result<FiniteCubicalSet> {
    Ok(match b {
        Builtin::MinimalInterval => minimal_interval(bound)?,
        Builtin::CodiscreteInterval => codiscrete_interval(bound)?,
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_set(path: Option<&Path>, builtin: Option<Builtin>, bound: usize) -> Result<FiniteCubicalSet> {
    match (path, builtin) {
        (Some(p), None) => Ok(io::cubeset_from_json(&read(p)?)?),
        (None, Some(b)) => builtin_set(b, bound),
        _ => bail!(kanlab::Error::Parse("give either a file or --builtin".into())),
    }
}

fn builtin_map(b: FibBuiltin, bound: usize) -> Result<CubicalMap> {
    Ok(match b {
        FibBuiltin::MinimalInterval => CubicalMap::terminal(&minimal_interval(bound)?),
        FibBuiltin::CodiscreteInterval => CubicalMap::terminal(&codiscrete_interval(bound)?),
        FibBuiltin::Relabel => CubicalMap::codiscrete(&["a0", "a1"], &["0", "1"], &[0, 1], bound)?,
    })
}

fn load_map(path: Option<&Path>, builtin: Option<FibBuiltin>, bound: usize) -> Result<CubicalMap> {
    match (path, builtin) {
        (Some(p), None) => Ok(io::map_from_json(&read(p)?)?),
        (None, Some(b)) => builtin_map(b, bound),
        _ => bail!(kanlab::Error::Parse("give either a file or --builtin".into())),
    }
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn cmd_interval(kind: IntervalKind, bound: usize, dot: Option<&Path>) -> Result<u8> {
    let x = match kind {
        IntervalKind::Minimal => minimal_interval(bound)?,
        IntervalKind::Codiscrete => codiscrete_interval(bound)?,
    };
    for n in 0..=bound {
        println!("dimension {n}: {} cubes", x.carrier_len(n));
        if n <= 2 {
            for c in x.cubes(n) {
                let vs: Vec<String> = (0..1usize << n)
                    .map(|w| {
                        let bits: Vec<u8> = (0..n).map(|k| ((w >> k) & 1) as u8).collect();
                        let v = x.act(MorphKey::from_codes(0, &bits), c).expect("within bound");
                        let coords: String = bits.iter().map(|b| char::from(b'0' + b)).collect();
                        if n == 0 {
                            x.label(0, v).to_owned()
                        } else {
                            format!("{coords}:{}", x.label(0, v))
                        }
                    })
                    .collect();
                println!("  {}  [{}]", x.label(n, c), vs.join(" "));
            }
        }
    }
    if let Some(path) = dot {
        write(path, &io::to_dot(&x, 2))?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn cmd_check(path: &Path) -> Result<u8> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(kanlab::Error::from)?;
    let verdict = if value.get("components").is_some() {
        io::map_from_json(&text).map(|p| {
            format!(
                "OK: natural map with source sizes {:?} and target sizes {:?}",
                p.source().carrier_sizes(),
                p.target().carrier_sizes()
            )
        })
    } else {
        io::cubeset_from_json(&text).map(|x| format!("OK: functor laws hold, sizes {:?}", x.carrier_sizes()))
    };
    match verdict {
        Ok(line) => {
            println!("{line}");
            Ok(0)
        }
        Err(e @ kanlab::Error::Parse(_)) => Err(e.into()),
        Err(e) => {
            println!("violation: {e}");
            Ok(EXIT_VALIDATION)
        }
    }
}

fn report_synthesis<B: Ord>(outcome: Synthesis<B>, describe: impl Fn(&B) -> String) -> Result<FillingTable<B>, u8> {
    match outcome {
        Synthesis::Found(t) => Ok(t),
        Synthesis::Nonexistent { witness } => {
            println!("uniformity: no uniform table exists");
            if let Some(w) = witness {
                println!("witness: {}", describe(&w));
            }
            Err(EXIT_VALIDATION)
        }
        Synthesis::BudgetExhausted { decisions } => {
            println!("uniformity: budget exhausted after {decisions} decisions");
            Err(EXIT_BUDGET)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_kan(
    path: Option<&Path>,
    builtin: Option<Builtin>,
    bound: usize,
    uniform: bool,
    synthesize: bool,
    table_path: Option<&Path>,
    budget: usize,
    output: Option<&Path>,
) -> Result<u8> {
    let x = load_set(path, builtin, bound)?;
    match is_kan(&x) {
        KanVerdict::Kan { boxes } => println!("KAN: {boxes} boxes have fillers"),
        KanVerdict::NotKan { witness } => {
            println!("NOT KAN");
            println!("witness: {}", witness.describe(&x));
            return Ok(EXIT_VALIDATION);
        }
    }
    if !uniform && !synthesize {
        return Ok(0);
    }
    let table = if synthesize {
        match report_synthesis(synthesize_uniform(&x, budget), |b| b.describe(&x)) {
            Ok(t) => t,
            Err(code) => return Ok(code),
        }
    } else if let Some(p) = table_path {
        io::table_from_json(&x, &read(p)?)?
    } else if builtin == Some(Builtin::CodiscreteInterval) {
        codiscrete_table(&x, 2)?
    } else {
        bail!(kanlab::Error::Validation("--uniform needs --table or --synthesize".into()));
    };
    let section = check_section(&x, &table);
    let violations = check_uniform(&x, &table);
    for line in &section {
        println!("section: {line}");
    }
    for v in &violations {
        println!("uniformity: {v}");
    }
    if let Some(out) = output {
        write(out, &io::table_to_json(&x, &table))?;
        println!("table written to {} ({} entries)", out.display(), table.len());
    }
    if section.is_empty() && violations.is_empty() {
        println!("uniformity: OK ({} entries)", table.len());
        Ok(0)
    } else {
        Ok(EXIT_VALIDATION)
    }
}

fn cmd_roundtrip(path: Option<&Path>, builtin: Option<Builtin>, bound: usize) -> Result<u8> {
    let x = load_set(path, builtin, bound)?;
    let mut checked = 0;
    let mut failures = Vec::new();
    for shape in BoxShape::all_canonical(x.bound()) {
        for b in enumerate_boxes(&x, &shape)? {
            let beta = realize(&x, &b)?;
            if nerve(&beta)? != b {
                failures.push(format!("nerve of realization differs for [{}]", b.describe(&x)));
            }
            if let Some(line) = check_geom_box(&x, &beta).into_iter().next() {
                failures.push(format!("[{}]: {line}", b.describe(&x)));
            }
            checked += 1;
        }
        for c in x.cubes(shape.dim()) {
            let kappa = geometric_of_algebraic(&x, shape.full(), c)?;
            let table = kappa
                .table()
                .iter()
                .filter(|(m, _)| member_face(&shape, m).is_some())
                .map(|(m, &v)| (m.clone(), v))
                .collect();
            if nerve(&GeomBox::from_table(shape.clone(), table))? != box_projection(&x, &shape, c)? {
                failures.push(format!("{shape}: projections differ at `{}`", x.label(shape.dim(), c)));
            }
        }
    }
    for f in &failures {
        println!("{f}");
    }
    if failures.is_empty() {
        println!("OK: {checked} boxes checked");
        Ok(0)
    } else {
        Ok(EXIT_VALIDATION)
    }
}

fn fib_table(p: &CubicalMap, builtin: Option<FibBuiltin>, budget: usize) -> Result<FillingTable<FibAlgBox>, u8> {
    let closed = match builtin {
        Some(FibBuiltin::Relabel) => codiscrete_fib_table(p, &[0, 1], 2).ok(),
        Some(FibBuiltin::CodiscreteInterval) => {
            codiscrete_table(p.source(), 2).ok().map(|t| terminal_fib_table(&t))
        }
        _ => None,
    };
    match closed {
        Some(t) => Ok(t),
        None => report_synthesis(synthesize_uniform_fib(p, budget), |b| b.describe(p)),
    }
}

fn cmd_transport(
    map: Option<&Path>,
    table: Option<&Path>,
    builtin: Option<FibBuiltin>,
    bound: usize,
    line: &str,
    point: &str,
    budget: usize,
) -> Result<u8> {
    let p = load_map(map, builtin, bound)?;
    let table = match table {
        Some(t) => io::fib_table_from_json(&p, &read(t)?)?,
        None if builtin.is_some() => match fib_table(&p, builtin, budget) {
            Ok(t) => t,
            Err(code) => return Ok(code),
        },
        None => bail!(kanlab::Error::Parse("a map file needs a table file".into())),
    };
    let kappa = p.target().lookup(1, line)?;
    let y0 = p.source().lookup(0, point)?;
    let y1 = transport(&p, &table, kappa, y0)?;
    println!("{}", p.source().label(0, y1));
    Ok(0)
}

fn cmd_fib_check(
    path: Option<&Path>,
    builtin: Option<FibBuiltin>,
    bound: usize,
    synthesize: bool,
    budget: usize,
    output: Option<&Path>,
) -> Result<u8> {
    let p = load_map(path, builtin, bound)?;
    match is_kan_fibration(&p) {
        KanVerdict::Kan { boxes } => println!("FIBRATION: {boxes} boxes have fillers"),
        KanVerdict::NotKan { witness } => {
            println!("NOT A FIBRATION");
            println!("witness: {}", witness.describe(&p));
            return Ok(EXIT_VALIDATION);
        }
    }
    if !synthesize {
        return Ok(0);
    }
    let table = match report_synthesis(synthesize_uniform_fib(&p, budget), |b| b.describe(&p)) {
        Ok(t) => t,
        Err(code) => return Ok(code),
    };
    let mut failures = check_fib_section(&p, &table);
    failures.extend(check_fib_uniform(&p, &table).iter().map(ToString::to_string));
    for f in &failures {
        println!("uniformity: {f}");
    }
    if let Some(out) = output {
        write(out, &io::fib_table_to_json(&p, &table))?;
        println!("table written to {} ({} entries)", out.display(), table.len());
    }
    if failures.is_empty() {
        println!("uniformity: OK ({} entries)", table.len());
        Ok(0)
    } else {
        Ok(EXIT_VALIDATION)
    }
}

fn run(cli: Cli) -> Result<u8> {
    let bound = cli.bound;
    match cli.command {
        Command::Interval { kind, dot } => cmd_interval(kind, bound, dot.as_deref()),
        Command::Check { path } => cmd_check(&path),
        Command::Kan { path, builtin, uniform, synthesize, table, budget, output } => cmd_kan(
            path.as_deref(),
            builtin,
            bound,
            uniform,
            synthesize,
            table.as_deref(),
            budget,
            output.as_deref(),
        ),
        Command::Roundtrip { path, builtin } => cmd_roundtrip(path.as_deref(), builtin, bound),
        Command::Transport { map, table, builtin, line, point, budget } => {
            cmd_transport(map.as_deref(), table.as_deref(), builtin, bound, &line, &point, budget)
        }
        Command::FibCheck { path, builtin, synthesize, budget, output } => {
            cmd_fib_check(path.as_deref(), builtin, bound, synthesize, budget, output.as_deref())
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<std::io::Error>().is_some() {
        return EXIT_PARSE;
    }
    match err.downcast_ref::<kanlab::Error>() {
        Some(kanlab::Error::Parse(_)) => EXIT_PARSE,
        _ => EXIT_VALIDATION,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
