//! Command-line front end. Every verb is a thin adapter over the library;
//! no combinatorial logic lives here.
//!
//! Exit codes: 0 success, 1 domain/capacity/usage error, 2 internal
//! invariant violation (a bug, not bad input). `PARSIGAMES_ORACLE_CAP`
//! overrides the brute-force oracle's player cap.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::{self, Triangle};
use crate::error::{Error, Result};
use crate::genealogy::{self, GenerationLayer, ParityClass};
use crate::oracle;
use crate::pivots::{self, PivotTriangle};
use crate::representations::{
    enumerate_games, FreeBinaryRepr, FreeTypeRepr, Game, GameJson,
};
use crate::symmetry;

#[derive(Parser)]
#[command(
    name = "parsigames",
    about = "Exact combinatorics engine for parsimonious games",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum GameFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TriangleArg {
    C,
    Gamma,
    Delta,
    Theta,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a game among its representations and print quota and weights.
    Convert {
        /// Free type vector, comma-separated (e.g. 2,2,1,3).
        #[arg(long, value_name = "X1,X2,...", conflicts_with = "free_binary")]
        free_type: Option<String>,
        /// Free binary vector as a 0/1 string (e.g. 10110).
        #[arg(long, value_name = "BITS")]
        free_binary: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: GameFormat,
    },
    /// Certify the defining properties by brute force.
    Verify {
        /// Verify every game on n players.
        #[arg(long, requires = "all")]
        n: Option<usize>,
        #[arg(long)]
        all: bool,
        /// Verify a single game given by its free type vector.
        #[arg(long, value_name = "X1,X2,...", conflicts_with = "n")]
        free_type: Option<String>,
        /// Include minimal winning coalition bitmasks in the report.
        #[arg(long)]
        emit_wm: bool,
    },
    /// Print the twin of a game and both quotas.
    Twin {
        #[arg(long, value_name = "X1,X2,...")]
        free_type: String,
    },
    /// List all games on n players in free-binary lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: GameFormat,
    },
    /// Print one of the counting triangles C, gamma, delta, theta.
    Census {
        #[arg(long, default_value_t = 8)]
        max_m: usize,
        #[arg(long, value_enum, default_value = "gamma")]
        triangle: TriangleArg,
        #[arg(long, value_enum, default_value = "table")]
        format: TableFormat,
    },
    /// Build the genealogical tree of self-twin games.
    Tree {
        #[arg(long, default_value_t = 5)]
        max_m: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: TreeFormat,
    },
    /// Print a pivot triangle (values with repetition counts).
    Pivots {
        #[arg(long, default_value_t = 12)]
        max_m: usize,
        #[arg(long, value_enum, default_value = "even")]
        parity: ParityArg,
        #[arg(long, value_enum, default_value = "table")]
        format: TableFormat,
    },
    /// Emit the golden table and catalog files into a directory.
    ReproducePaper {
        #[arg(long, value_name = "DIR")]
        out_dir: PathBuf,
    },
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            eprint!("{err}");
            return 1;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(err @ Error::Invariant(_)) => {
            eprintln!("error: {err}");
            2
        }
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn oracle_cap() -> usize {
    std::env::var("PARSIGAMES_ORACLE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(oracle::DEFAULT_ORACLE_CAP)
}

fn parse_free_type(text: &str) -> Result<FreeTypeRepr> {
    let components = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::Domain(format!("bad free type component {part:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    FreeTypeRepr::new(components)
}

fn parse_free_binary(text: &str) -> Result<FreeBinaryRepr> {
    let bits = text
        .chars()
        .map(|ch| match ch {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::Domain(format!("bad free binary digit {other:?}"))),
        })
        .collect::<Result<Vec<u8>>>()?;
    FreeBinaryRepr::new(bits)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|item| item.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn print_game_table(game: &Game) {
    let json = GameJson::from_game(game);
    println!("free_type: {}", join(json.free_type.iter(), ","));
    println!("free_binary: {}", join(json.free_binary.iter(), ""));
    println!("n: {}  h: {}", json.n, json.h);
    println!("q: {}", json.quota);
    println!("weights: {}", join(json.weights.iter(), ","));
    println!("self_twin: {}", json.self_twin);
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Convert { free_type, free_binary, format } => {
            let game = match (free_type, free_binary) {
                (Some(text), None) => Game::new(parse_free_type(&text)?),
                (None, Some(text)) => Game::from_free_binary(&parse_free_binary(&text)?),
                _ => {
                    return Err(Error::Domain(
                        "exactly one of --free-type or --free-binary is required".into(),
                    ))
                }
            };
            match format {
                GameFormat::Table => print_game_table(&game),
                GameFormat::Json => {
                    println!("{}", serde_json::to_string(&GameJson::from_game(&game)).unwrap())
                }
            }
            Ok(())
        }
        Command::Verify { n, all, free_type, emit_wm } => {
            let cap = oracle_cap();
            let games: Vec<Game> = match (n, all, free_type) {
                (Some(n), true, None) => enumerate_games(n)?.collect(),
                (None, false, Some(text)) => vec![Game::new(parse_free_type(&text)?)],
                _ => {
                    return Err(Error::Domain(
                        "use either --n N --all or --free-type".into(),
                    ))
                }
            };
            for game in games {
                let report = oracle::certify_capped(&game.min_hom(), cap)?;
                let mut value = serde_json::to_value(&report).unwrap();
                value["free_type"] =
                    serde_json::json!(game.free_type().components());
                if emit_wm {
                    value["wm"] = serde_json::json!(
                        report.wm_list.iter().map(|c| c.0).collect::<Vec<_>>()
                    );
                }
                println!("{value}");
            }
            Ok(())
        }
        Command::Twin { free_type } => {
            let game = Game::new(parse_free_type(&free_type)?);
            let twin = symmetry::twin(&game);
            println!("twin: {}", join(twin.free_type().components().iter(), ","));
            println!("quota: {}", game.min_hom().quota);
            println!("twin_quota: {}", twin.min_hom().quota);
            Ok(())
        }
        Command::Enumerate { n, format } => {
            for game in enumerate_games(n)? {
                let json = GameJson::from_game(&game);
                match format {
                    GameFormat::Json => println!("{}", serde_json::to_string(&json).unwrap()),
                    GameFormat::Table => println!(
                        "h={} free_type=({}) q={} weights={} self_twin={}",
                        json.h,
                        join(json.free_type.iter(), ","),
                        json.quota,
                        join(json.weights.iter(), ","),
                        json.self_twin
                    ),
                }
            }
            Ok(())
        }
        Command::Census { max_m, triangle, format } => {
            let triangle = build_triangle(triangle, max_m)?;
            match format {
                TableFormat::Csv => print!("{}", triangle_csv(&triangle)),
                TableFormat::Table => {
                    for (m, row) in triangle.rows.iter().enumerate() {
                        println!("m={m}: {}", join(row.iter(), " "));
                    }
                }
            }
            Ok(())
        }
        Command::Tree { max_m, format } => {
            let layers = genealogy::build_tree(max_m)?;
            match format {
                TreeFormat::Json => println!("{}", tree_json(&layers)),
                TreeFormat::Dot => print!("{}", tree_dot(&layers)),
            }
            Ok(())
        }
        Command::Pivots { max_m, parity, format } => {
            let (even, odd) = pivots::closed_form_triangles(max_m)?;
            let triangle = match parity {
                ParityArg::Even => even,
                ParityArg::Odd => odd,
            };
            match format {
                TableFormat::Csv => print!("{}", pivot_csv(&triangle)),
                TableFormat::Table => {
                    for row in &triangle.rows {
                        let cells: Vec<String> = row
                            .entries
                            .iter()
                            .map(|(value, reps)| format!("{value}({reps})"))
                            .collect();
                        println!("m={}: {}", row.m, cells.join(" "));
                    }
                }
            }
            Ok(())
        }
        Command::ReproducePaper { out_dir } => {
            let written = reproduce_paper(&out_dir)?;
            for path in written {
                println!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

fn build_triangle(arg: TriangleArg, max_m: usize) -> Result<Triangle> {
    Ok(match arg {
        TriangleArg::C => census::c_triangle(max_m),
        TriangleArg::Gamma => census::gamma_recurrence(max_m),
        TriangleArg::Delta => census::delta_theta(max_m)?.0,
        TriangleArg::Theta => census::delta_theta(max_m)?.1,
    })
}

fn triangle_csv(triangle: &Triangle) -> String {
    let mut out = String::from("m,k,value\n");
    for (m, row) in triangle.rows.iter().enumerate() {
        for (k, value) in row.iter().enumerate() {
            out.push_str(&format!("{m},{k},{value}\n"));
        }
    }
    out
}

fn pivot_csv(triangle: &PivotTriangle) -> String {
    let mut out = String::from("m,c,value,repetitions\n");
    for row in &triangle.rows {
        for (c, (value, reps)) in row.entries.iter().enumerate() {
            out.push_str(&format!("{},{},{value},{reps}\n", row.m, c + 1));
        }
    }
    out
}

#[derive(Serialize)]
struct TreeNodeJson {
    #[serde(flatten)]
    game: GameJson,
    parity_class: ParityClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pivot: Option<u32>,
    parent_index: Option<usize>,
}

#[derive(Serialize)]
struct TreeLayerJson {
    m: usize,
    nodes: Vec<TreeNodeJson>,
}

#[derive(Serialize)]
struct TreeJson {
    layers: Vec<TreeLayerJson>,
}

fn tree_json(layers: &[GenerationLayer]) -> String {
    let doc = TreeJson {
        layers: layers
            .iter()
            .map(|layer| TreeLayerJson {
                m: layer.m,
                nodes: layer
                    .nodes
                    .iter()
                    .map(|node| TreeNodeJson {
                        game: GameJson::from_game(&node.game),
                        parity_class: node.parity_class,
                        pivot: node.pivot,
                        parent_index: node.parent,
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).unwrap()
}

fn tree_dot(layers: &[GenerationLayer]) -> String {
    let label = |game: &Game| join(game.free_type().components().iter(), ",");
    let mut out = String::from("digraph genealogy {\n  rankdir=TB;\n");
    for layer in layers {
        for (i, node) in layer.nodes.iter().enumerate() {
            out.push_str(&format!(
                "  \"m{}_{}\" [label=\"({})\"];\n",
                layer.m,
                i,
                label(&node.game)
            ));
            if let Some(parent) = node.parent {
                out.push_str(&format!(
                    "  \"m{}_{}\" -> \"m{}_{}\";\n",
                    layer.m - 1,
                    parent,
                    layer.m,
                    i
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn catalog_json(n: usize) -> Result<String> {
    #[derive(Serialize)]
    struct Catalog {
        n: usize,
        games: Vec<GameJson>,
    }
    let mut games: Vec<GameJson> = enumerate_games(n)?.map(|g| GameJson::from_game(&g)).collect();
    games.sort_by_key(|g| g.h); // stable: enumeration order within each h
    Ok(serde_json::to_string_pretty(&Catalog { n, games }).unwrap())
}

/// Emits the golden files: triangle CSVs for m <= 8, pivot CSVs for the rows
/// shown in the reference tables, the n=8 and n=9 catalogs, and the tree up
/// to m = 5. Output is byte-identical across runs.
pub fn reproduce_paper(out_dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir).map_err(|source| Error::Io {
        path: out_dir.to_path_buf(),
        source,
    })?;
    let mut written = Vec::new();
    let mut emit = |name: &str, contents: String| -> Result<()> {
        let path = out_dir.join(name);
        write_file(&path, &contents)?;
        written.push(path);
        Ok(())
    };

    emit("gamma.csv", triangle_csv(&census::gamma_recurrence(8)))?;
    let (delta, theta) = census::delta_theta(8)?;
    emit("delta.csv", triangle_csv(&delta))?;
    emit("theta.csv", triangle_csv(&theta))?;

    let (even, _) = pivots::closed_form_triangles(12)?;
    emit("pivots_even.csv", pivot_csv(&even))?;
    let (_, odd) = pivots::closed_form_triangles(9)?;
    emit("pivots_odd.csv", pivot_csv(&odd))?;

    emit("catalog_n8.json", catalog_json(8)?)?;
    emit("catalog_n9.json", catalog_json(9)?)?;

    emit("tree_m5.json", tree_json(&genealogy::build_tree(5)?))?;

    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_type_parsing() {
        assert!(parse_free_type("2,2,1,3").is_ok());
        assert!(parse_free_type("2,x").is_err());
        assert!(parse_free_type("1,2").is_err());
    }

    #[test]
    fn free_binary_parsing() {
        assert_eq!(parse_free_binary("10110").unwrap().bits(), &[1, 0, 1, 1, 0]);
        assert!(parse_free_binary("102").is_err());
    }

    #[test]
    fn triangle_csv_shape() {
        let csv = triangle_csv(&census::gamma_recurrence(2));
        assert_eq!(csv, "m,k,value\n0,0,1\n1,0,1\n1,1,1\n2,0,1\n2,1,0\n2,2,1\n");
    }

    #[test]
    fn pivot_csv_shape() {
        let (even, _) = pivots::closed_form_triangles(2).unwrap();
        let csv = pivot_csv(&even);
        assert_eq!(csv, "m,c,value,repetitions\n0,1,3,1\n2,1,1,1\n2,2,5,1\n");
    }
}
