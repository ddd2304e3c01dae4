use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use regsolve::arena::{edge_game_to_vertex_game, parse_pgsolver, write_pgsolver, ParityGame, Player};
use regsolve::automata::{
    accepts, apw_to_aww_with, build_parameterised_with, lasso_to_kripke, parameterised_state_bound,
    parse_automaton, parse_lasso, sync_product, write_automaton, AltAutomaton, Variant,
    WeakenOptions,
};
use regsolve::generators::{gen_figure, gen_h, gen_random, gen_random_edges};
use regsolve::register::{
    build_register_arena, register_index, register_index_capped, solve_via_registers,
};
use regsolve::solvers::{solve_spm, solve_zielonka};

#[derive(Parser)]
#[command(name = "regsolve", version, about = "Parity games, register games and alternating automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Zielonka,
    Spm,
    Register,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    H,
    Fig0,
    Fighigh,
    Fig1,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Eve,
    Adam,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a PGSolver game.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "zielonka")]
        algo: Algo,
        #[arg(long)]
        json: bool,
    },
    /// Register-index of a PGSolver game.
    Index {
        file: PathBuf,
        /// Largest k tried for either player (default: register budget for
        /// Eve, one more for Adam).
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print a generated game in PGSolver format.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest priority of random games.
        #[arg(long, default_value_t = 6)]
        d: u32,
        /// Random games get priorities on edges, then are converted.
        #[arg(long)]
        edges: bool,
    },
    /// Print the register arena of a game as a PGSolver game.
    Arena {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "eve")]
        controller: Side,
    },
    /// Print A_k, or with --weak an equivalent weak automaton.
    Translate {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        weak: bool,
        /// With --weak, peel the input automaton without building A_k.
        #[arg(long)]
        direct: bool,
        /// Build A_k with the verbatim output rule.
        #[arg(long)]
        verbatim: bool,
        #[arg(long)]
        state_cap: Option<usize>,
    },
    /// Whether an automaton accepts a lasso `<prefix>:<loop>`.
    Accepts {
        file: PathBuf,
        #[arg(long)]
        lasso: String,
    },
    /// Synchronised product of an automaton with a game automaton.
    Product { a: PathBuf, b: PathBuf },
    /// Solve every .gm file of a directory and tabulate.
    Bench {
        dir: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_game(path: &Path) -> Result<ParityGame, Failure> {
    parse_pgsolver(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_automaton(path: &Path) -> Result<AltAutomaton, Failure> {
    parse_automaton(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn player_name(p: Player) -> &'static str {
    match p {
        Player::Eve => "eve",
        Player::Adam => "adam",
    }
}

#[derive(Serialize)]
struct VertexReport {
    vertex: usize,
    name: Option<String>,
    winner: &'static str,
    strategy: Option<usize>,
}

#[derive(Serialize)]
struct SolveReport {
    algorithm: &'static str,
    win_eve: Vec<usize>,
    win_adam: Vec<usize>,
    vertices: Vec<VertexReport>,
}

fn solve(file: &Path, algo: Algo, json: bool, out: &mut String) -> Outcome {
    let game = read_game(file)?;
    let (name, winner, strategy) = match algo {
        Algo::Zielonka => {
            let s = solve_zielonka(&game);
            ("zielonka", s.winner, s.strategy)
        }
        Algo::Spm => {
            let s = solve_spm(&game);
            ("spm", s.winner, s.strategy)
        }
        Algo::Register => {
            let (eve, _) = solve_via_registers(&game);
            let mut winner = vec![Player::Adam; game.len()];
            for v in eve {
                winner[v] = Player::Eve;
            }
            ("register", winner, vec![None; game.len()])
        }
    };
    let vertices: Vec<VertexReport> = game
        .vertices()
        .map(|v| VertexReport {
            vertex: v,
            name: game.name(v).map(str::to_string),
            winner: player_name(winner[v]),
            strategy: strategy[v],
        })
        .collect();
    let report = SolveReport {
        algorithm: name,
        win_eve: game.vertices().filter(|&v| winner[v] == Player::Eve).collect(),
        win_adam: game.vertices().filter(|&v| winner[v] == Player::Adam).collect(),
        vertices,
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(());
    }
    let list = |vs: &[usize]| vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    writeln!(out, "algorithm {}", report.algorithm)?;
    writeln!(out, "eve: {}", list(&report.win_eve))?;
    writeln!(out, "adam: {}", list(&report.win_adam))?;
    for v in &report.vertices {
        let strategy = v.strategy.map_or("-".to_string(), |w| w.to_string());
        writeln!(out, "{} {} {}", v.vertex, v.winner, strategy)?;
    }
    Ok(())
}

fn index(file: &Path, max_k: Option<usize>, json: bool, out: &mut String) -> Outcome {
    let game = read_game(file)?;
    let idx = match max_k {
        Some(k) => register_index_capped(&game, k, k)?,
        None => register_index(&game)?,
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&idx)?)?;
        return Ok(());
    }
    writeln!(out, "global {}", idx.global)?;
    for (v, k) in idx.per_vertex.iter().enumerate() {
        writeln!(out, "{v} {} {k}", player_name(idx.winner[v]))?;
    }
    Ok(())
}

fn generate(family: Family, n: Option<usize>, seed: u64, d: u32, edges: bool, out: &mut String) -> Outcome {
    let need = |n: Option<usize>| n.ok_or_else(|| Failure("this family needs --n".into()));
    let game = match family {
        Family::H => edge_game_to_vertex_game(&gen_h(need(n)?)?),
        Family::Fig0 => edge_game_to_vertex_game(&gen_figure("fig0", None)?),
        Family::Fighigh => edge_game_to_vertex_game(&gen_figure("fighigh", None)?),
        Family::Fig1 => edge_game_to_vertex_game(&gen_figure("fig1", Some(need(n)?))?),
        Family::Random => {
            let n = need(n)?;
            let deg = n.min(3);
            if edges {
                edge_game_to_vertex_game(&gen_random_edges(n, d, 1, deg, seed)?)
            } else {
                gen_random(n, d, 1, deg, seed)?
            }
        }
    };
    write!(out, "{}", write_pgsolver(&game))?;
    Ok(())
}

fn arena(file: &Path, k: usize, side: Side, out: &mut String) -> Outcome {
    let game = read_game(file)?;
    let controller = match side {
        Side::Eve => Player::Eve,
        Side::Adam => Player::Adam,
    };
    let arena = build_register_arena(&game, k, controller);
    write!(out, "{}", write_pgsolver(&arena.to_vertex_game()))?;
    Ok(())
}

struct TranslateArgs {
    k: Option<usize>,
    weak: bool,
    direct: bool,
    verbatim: bool,
    state_cap: Option<usize>,
}

fn translate(file: &Path, args: TranslateArgs, out: &mut String) -> Outcome {
    let a = read_automaton(file)?;
    if args.weak {
        let mut options = WeakenOptions {
            k: args.k,
            direct: args.direct,
            ..WeakenOptions::default()
        };
        if let Some(cap) = args.state_cap {
            options.state_cap = cap;
        }
        let report = apw_to_aww_with(&a, &options)?;
        match report.k {
            Some(k) => writeln!(out, "# k {k}")?,
            None => writeln!(out, "# k direct")?,
        }
        writeln!(out, "# input states {}", report.input_states)?;
        writeln!(out, "# peeled input states {}", report.peeled_input_states)?;
        writeln!(out, "# peeling rounds {}", report.peels)?;
        writeln!(out, "# states {}", report.states)?;
        writeln!(out, "# size bound {:.3e}", report.bound)?;
        write!(out, "{}", write_automaton(&report.automaton))?;
        return Ok(());
    }
    let k = args.k.unwrap_or_else(|| regsolve::automata::weak::default_registers(&a));
    let variant = if args.verbatim {
        Variant::Verbatim
    } else {
        Variant::Aggregated
    };
    let ak = build_parameterised_with(&a, k, variant);
    writeln!(out, "# k {k}")?;
    writeln!(out, "# states {}", ak.len())?;
    writeln!(out, "# state bound {}", parameterised_state_bound(&a, k))?;
    write!(out, "{}", write_automaton(&ak))?;
    Ok(())
}

fn check_accepts(file: &Path, lasso: &str, out: &mut String) -> Outcome {
    let a = read_automaton(file)?;
    let w = parse_lasso(lasso)?;
    writeln!(out, "{}", accepts(&lasso_to_kripke(&w), &a)?)?;
    Ok(())
}

fn product(a: &Path, b: &Path, out: &mut String) -> Outcome {
    let p = sync_product(&read_automaton(a)?, &read_automaton(b)?)?;
    write!(out, "{}", write_automaton(&p))?;
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    game: String,
    n: usize,
    d: u32,
    register_index: usize,
    zielonka_ms: f64,
    spm_ms: f64,
    register_ms: f64,
    arena_states: usize,
    arena_bound: f64,
    ratio: f64,
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn bench_one(path: &Path) -> Result<BenchRow, Failure> {
    let game = read_game(path)?;
    let t = Instant::now();
    let z = solve_zielonka(&game);
    let zielonka_ms = millis(t);
    let t = Instant::now();
    let s = solve_spm(&game);
    let spm_ms = millis(t);
    let t = Instant::now();
    let (eve, _) = solve_via_registers(&game);
    let register_ms = millis(t);
    if s.winner != z.winner || eve != z.win_eve() {
        return Err(Failure(format!("{}: solvers disagree", path.display())));
    }
    let idx = register_index(&game)?;
    let arena = build_register_arena(&game, idx.global, Player::Eve);
    let arena_bound = arena.state_bound();
    Ok(BenchRow {
        game: path.file_name().map_or_else(String::new, |f| f.to_string_lossy().into_owned()),
        n: game.len(),
        d: game.max_priority(),
        register_index: idx.global,
        zielonka_ms,
        spm_ms,
        register_ms,
        arena_states: arena.len(),
        arena_bound,
        ratio: arena.len() as f64 / arena_bound,
    })
}

fn threads() -> Option<usize> {
    std::env::var("REGSOLVE_THREADS").ok()?.parse().ok().filter(|&t| t > 0)
}

fn bench(dir: &Path, json: bool, out: &mut String) -> Outcome {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure(format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "gm"))
        .collect();
    files.sort();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads() {
        pool = pool.num_threads(t);
    }
    let pool = pool.build()?;
    let rows: Vec<BenchRow> = pool.install(|| {
        files
            .par_iter()
            .map(|p| bench_one(p))
            .collect::<Result<Vec<_>, _>>()
    })?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        return Ok(());
    }
    writeln!(out, "game\tn\td\tindex\tzielonka_ms\tspm_ms\tregister_ms\tarena\tbound\tratio")?;
    for r in rows {
        writeln!(out, 
            "{}\t{}\t{}\t{}\t{:.3}\t{:.3}\t{:.3}\t{}\t{:.0}\t{:.4}",
            r.game, r.n, r.d, r.register_index, r.zielonka_ms, r.spm_ms, r.register_ms, r.arena_states, r.arena_bound, r.ratio
        )?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut String) -> Outcome {
    match cli.command {
        Command::Solve { file, algo, json } => solve(&file, algo, json, out),
        Command::Index { file, max_k, json } => index(&file, max_k, json, out),
        Command::Gen {
            family,
            n,
            seed,
            d,
            edges,
        } => generate(family, n, seed, d, edges, out),
        Command::Arena { file, k, controller } => arena(&file, k, controller, out),
        Command::Translate {
            file,
            k,
            weak,
            direct,
            verbatim,
            state_cap,
        } => translate(
            &file,
            TranslateArgs {
                k,
                weak,
                direct,
                verbatim,
                state_cap,
            },
            out,
        ),
        Command::Accepts { file, lasso } => check_accepts(&file, &lasso, out),
        Command::Product { a, b } => product(&a, &b, out),
        Command::Bench { dir, json } => bench(&dir, json, out),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    let mut out = String::new();
    match run(cli, &mut out) {
        Ok(()) => {
            let mut stdout = io::stdout().lock();
            match stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    eprintln!("regsolve: {e}");
                    ExitCode::from(1)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(Failure(message)) => {
            eprintln!("regsolve: {message}");
            ExitCode::from(1)
        }
    }
}
