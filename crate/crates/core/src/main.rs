use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use pbw::coxeter::{self, GeneratorWord};
use pbw::expr::{format_element, parse_expression};
use pbw::geometry::{self, RenderOptions};
use pbw::holonomy::{self, Counterexample};
use pbw::normalize::{normalize_all_ways, normalize_traced};
use pbw::{BasisIndex, LiePresentation, Strategy, TensorElement, Word};

#[derive(Parser, Debug)]
#[command(
    name = "pbw",
    version,
    about = "Exact PBW straightening and its symmetric group geometry"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity of a presentation.
    Check(FileArg),
    /// Straighten an expression to canonical form.
    Normalize(NormalizeArgs),
    /// Brute-force every rewrite order for all words up to a length.
    Confluence(ConfluenceArgs),
    /// Transport words around identity loops and report nonzero holonomy.
    Holonomy(HolonomyArgs),
    /// Compare the two ways around the braid hexagon for basis triples.
    Hexagon(HexagonArgs),
    /// Contract an identity loop by local moves and print the certificate.
    Contract(ContractArgs),
    /// Count the tricky and easy codimension-two cells of S_n.
    Cells(CellsArgs),
    /// Draw the 24-chamber map of S_4 as SVG.
    Render(RenderArgs),
}

#[derive(Args, Debug)]
struct FileArg {
    /// A `.lie` presentation.
    file: PathBuf,
}

#[derive(Args, Debug)]
struct NormalizeArgs {
    file: PathBuf,
    /// Expression such as "c b a" or "2/3 a b - 1 c a".
    #[arg(short = 'e', long = "expr")]
    expr: String,
    #[arg(long, default_value = "leftmost")]
    strategy: Strategy,
    /// Print one line per rewrite step before the result.
    #[arg(long)]
    trace: bool,
}

#[derive(Args, Debug)]
struct ConfluenceArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    /// Stop exploring a word after this many distinct normal forms.
    #[arg(long, default_value_t = 16)]
    max_results: usize,
}

#[derive(Args, Debug)]
struct HolonomyArgs {
    file: PathBuf,
    /// Starting word, e.g. "c b a". Sampled at random when absent.
    #[arg(long)]
    word: Option<String>,
    /// Identity loop as 1-based positions, e.g. "1 2 1 2 1 2". Sampled when absent.
    #[arg(long = "loop")]
    lp: Option<String>,
    /// Word length when no word is given.
    #[arg(long)]
    n: Option<usize>,
    /// Number of sampled word/loop pairs.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Longest sampled loop.
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct HexagonArgs {
    file: PathBuf,
    /// Three basis names, e.g. "a b c". All triples when absent.
    #[arg(long)]
    triple: Option<String>,
}

#[derive(Args, Debug)]
struct ContractArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "loop")]
    lp: String,
}

#[derive(Args, Debug)]
struct CellsArgs {
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct RenderArgs {
    /// Write permutation labels into the regions.
    #[arg(long)]
    labels: bool,
    #[arg(long, default_value_t = 600)]
    size: u32,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    /// Bad arguments: exit 2.
    Usage(String),
    /// The engine refused or could not run: exit 1.
    Engine(String),
    /// Ran to completion and the check failed: exit 1, output already printed.
    Verification,
}

type Outcome = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn engine(e: impl std::fmt::Display) -> Failure {
    Failure::Engine(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Check(a) => check(&a, json),
        Command::Normalize(a) => normalize_cmd(&a, json),
        Command::Confluence(a) => confluence(&a, json),
        Command::Holonomy(a) => holonomy_cmd(&a, json),
        Command::Hexagon(a) => hexagon(&a, json),
        Command::Contract(a) => contract(&a, json),
        Command::Cells(a) => cells(&a, json),
        Command::Render(a) => render(&a, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Engine(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(json: bool, value: Value, text: &str) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable")
        );
    } else {
        print!("{text}");
    }
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn load(path: &Path) -> Result<LiePresentation, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| engine(format!("cannot read {}: {e}", path.display())))?;
    LiePresentation::parse(&text).map_err(|e| engine(format!("{}: {e}", path.display())))
}

fn names(lie: &LiePresentation, w: &Word) -> Vec<String> {
    w.letters()
        .iter()
        .map(|&i| lie.name(i).to_string())
        .collect()
}

/// A whitespace-separated word of basis names.
fn parse_word(lie: &LiePresentation, text: &str) -> Result<Word, Failure> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    Word::from_names(lie, &parts).ok_or_else(|| {
        let bad = parts
            .iter()
            .find(|p| lie.index_of(p).is_none())
            .unwrap_or(&"");
        usage(format!("unknown basis name `{bad}` in word `{text}`"))
    })
}

fn terms_json(lie: &LiePresentation, x: &TensorElement) -> Value {
    Value::Array(
        x.iter()
            .map(|(w, c)| json!({ "word": names(lie, w), "coeff": c.to_string() }))
            .collect(),
    )
}

fn triple_names(lie: &LiePresentation, t: (BasisIndex, BasisIndex, BasisIndex)) -> [&str; 3] {
    [lie.name(t.0), lie.name(t.1), lie.name(t.2)]
}

fn check(a: &FileArg, json: bool) -> Outcome {
    let lie = load(&a.file)?;
    let failures = lie.check_jacobi();
    let mut text = String::new();
    if failures.is_empty() {
        text.push_str("jacobi: ok\n");
    } else {
        let _ = writeln!(text, "jacobi: fails at {} triple(s)", failures.len());
        for (t, v) in &failures {
            let [x, y, z] = triple_names(&lie, *t);
            let _ = writeln!(text, "({x}, {y}, {z}): {}", lie.format_vector(v));
        }
    }
    let value = json!({
        "jacobi": failures.is_empty(),
        "failures": failures.iter().map(|(t, v)| json!({
            "triple": triple_names(&lie, *t),
            "defect": lie.format_vector(v),
        })).collect::<Vec<_>>(),
    });
    emit(json, value, &text);
    verdict(failures.is_empty())
}

fn normalize_cmd(a: &NormalizeArgs, json: bool) -> Outcome {
    let lie = load(&a.file)?;
    let x = parse_expression(&lie, &a.expr).map_err(usage)?;
    let (nf, steps) = normalize_traced(&lie, &x, a.strategy).map_err(engine)?;
    let mut text = String::new();
    if a.trace {
        for (k, s) in steps.iter().enumerate() {
            let _ = writeln!(
                text,
                "step {}: {} {} at {}: {}",
                k + 1,
                s.coeff,
                s.word.display(&lie),
                s.position,
                format_element(&lie, &s.correction)
            );
        }
    }
    let _ = writeln!(text, "{}", format_element(&lie, &nf));
    let mut value = json!({
        "input": format_element(&lie, &x),
        "strategy": a.strategy.to_string(),
        "result": format_element(&lie, &nf),
        "terms": terms_json(&lie, &nf),
    });
    if a.trace {
        value["trace"] = steps
            .iter()
            .map(|s| {
                json!({
                    "word": names(&lie, &s.word),
                    "coeff": s.coeff.to_string(),
                    "position": s.position,
                    "correction": format_element(&lie, &s.correction),
                })
            })
            .collect();
    }
    emit(json, value, &text);
    Ok(())
}

/// All words over the basis with length in `1..=max_len`, in word order.
fn all_words(dim: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..dim).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().map(|v| Word::from_indices(v)));
    }
    out
}

fn confluence(a: &ConfluenceArgs, json: bool) -> Outcome {
    let lie = load(&a.file)?;
    if a.max_results == 0 {
        return Err(usage("--max-results must be positive"));
    }
    let words = all_words(lie.dim(), a.max_len);
    let mut bad = Vec::new();
    for w in &words {
        match normalize_all_ways(&lie, w, a.max_results) {
            Ok(forms) if forms.len() == 1 => {}
            Ok(forms) => bad.push((w.clone(), forms.into_iter().collect::<Vec<_>>())),
            Err(pbw::AlgebraError::TooManyResults { .. }) => bad.push((w.clone(), Vec::new())),
            Err(e) => return Err(engine(e)),
        }
    }
    let mut text = format!(
        "words checked: {}\nnon-confluent: {}\n",
        words.len(),
        bad.len()
    );
    for (w, forms) in &bad {
        if forms.is_empty() {
            let _ = writeln!(
                text,
                "{}: more than {} normal forms",
                w.display(&lie),
                a.max_results
            );
        } else {
            let _ = writeln!(text, "{}: {} normal forms", w.display(&lie), forms.len());
        }
        for f in forms {
            let _ = writeln!(text, "  {}", format_element(&lie, f));
        }
    }
    let value = json!({
        "max_len": a.max_len,
        "words_checked": words.len(),
        "non_confluent": bad.iter().map(|(w, forms)| json!({
            "word": names(&lie, w),
            "forms": forms.iter().map(|f| format_element(&lie, f)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    emit(json, value, &text);
    verdict(bad.is_empty())
}

fn parse_loop(n: usize, text: &str) -> Result<GeneratorWord, Failure> {
    let g = GeneratorWord::parse(n, text).map_err(usage)?;
    if !coxeter::is_identity_loop(&g) {
        return Err(usage(format!("`{text}` is not an identity loop in S_{n}")));
    }
    Ok(g)
}

fn holonomy_cmd(a: &HolonomyArgs, json: bool) -> Outcome {
    let lie = load(&a.file)?;
    let word = a.word.as_deref().map(|t| parse_word(&lie, t)).transpose()?;
    let n = match (&word, a.n) {
        (Some(w), Some(n)) if w.len() != n => {
            return Err(usage(format!(
                "--n {n} disagrees with a word of length {}",
                w.len()
            )))
        }
        (Some(w), _) => w.len(),
        (None, Some(n)) => n,
        (None, None) => 3,
    };
    if n < 2 {
        return Err(usage("loops need words of length at least 2"));
    }
    let lp = a.lp.as_deref().map(|t| parse_loop(n, t)).transpose()?;

    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let pairs: Vec<(Word, GeneratorWord)> = if let (Some(w), Some(g)) = (&word, &lp) {
        vec![(w.clone(), g.clone())]
    } else {
        (0..a.samples)
            .map(|_| {
                let w = word.clone().unwrap_or_else(|| {
                    let letters: Vec<usize> = (0..n).map(|_| rng.gen_range(0..lie.dim())).collect();
                    Word::from_indices(&letters)
                });
                let g = match &lp {
                    Some(g) => Ok(g.clone()),
                    None => coxeter::random_identity_loop(n, a.max_len, &mut rng),
                };
                g.map(|g| (w, g))
            })
            .collect::<Result<_, _>>()
            .map_err(engine)?
    };

    let mut failures = Vec::new();
    for (w, g) in &pairs {
        let h = holonomy::loop_holonomy(&lie, w, g).map_err(engine)?;
        if !h.is_zero() {
            failures.push(Counterexample {
                word: w.clone(),
                lp: g.clone(),
                holonomy: h,
            });
        }
    }
    failures.sort();
    failures.dedup();

    let mut text = String::new();
    if pairs.len() == 1 && word.is_some() && lp.is_some() {
        let h = failures
            .first()
            .map_or_else(|| "0".to_string(), |c| format_element(&lie, &c.holonomy));
        let _ = writeln!(text, "holonomy: {h}");
    } else {
        let _ = writeln!(
            text,
            "pairs checked: {}\nnonzero: {}",
            pairs.len(),
            failures.len()
        );
        for c in &failures {
            let _ = writeln!(
                text,
                "{} around {}: {}",
                c.word.display(&lie),
                c.lp,
                format_element(&lie, &c.holonomy)
            );
        }
    }
    let value = json!({
        "checked": pairs.len(),
        "nonzero": failures.iter().map(|c| json!({
            "word": names(&lie, &c.word),
            "loop": c.lp.letters(),
            "holonomy": format_element(&lie, &c.holonomy),
        })).collect::<Vec<_>>(),
    });
    emit(json, value, &text);
    verdict(failures.is_empty())
}

fn hexagon(a: &HexagonArgs, json: bool) -> Outcome {
    let lie = load(&a.file)?;
    let triples: Vec<(BasisIndex, BasisIndex, BasisIndex)> = match &a.triple {
        Some(t) => {
            let w = parse_word(&lie, t)?;
            match w.letters() {
                &[i, j, k] => vec![(i, j, k)],
                _ => return Err(usage(format!("--triple needs three names, got `{t}`"))),
            }
        }
        None => {
            let d = lie.dim();
            let mut v = Vec::new();
            for i in 0..d {
                for j in i + 1..d {
                    for k in j + 1..d {
                        v.push((BasisIndex(i), BasisIndex(j), BasisIndex(k)));
                    }
                }
            }
            v
        }
    };
    let mut nonzero = Vec::new();
    for &(i, j, k) in &triples {
        let defect = holonomy::hexagon_defect(&lie, i, j, k).map_err(engine)?;
        if !defect.is_zero() {
            nonzero.push(((i, j, k), defect));
        }
    }
    let mut text = String::new();
    if a.triple.is_some() {
        let d = nonzero
            .first()
            .map_or_else(|| "0".into(), |(_, v)| lie.format_vector(v));
        let _ = writeln!(text, "hexagon defect: {d}");
    } else {
        let _ = writeln!(
            text,
            "triples checked: {}\nnonzero: {}",
            triples.len(),
            nonzero.len()
        );
        for (t, v) in &nonzero {
            let [x, y, z] = triple_names(&lie, *t);
            let _ = writeln!(text, "({x}, {y}, {z}): {}", lie.format_vector(v));
        }
    }
    let value = json!({
        "checked": triples.len(),
        "nonzero": nonzero.iter().map(|(t, v)| json!({
            "triple": triple_names(&lie, *t),
            "defect": lie.format_vector(v),
        })).collect::<Vec<_>>(),
    });
    emit(json, value, &text);
    verdict(nonzero.is_empty())
}

fn contract(a: &ContractArgs, json: bool) -> Outcome {
    let g = GeneratorWord::parse(a.n, &a.lp).map_err(usage)?;
    let cert = coxeter::contract_loop(&g).map_err(engine)?;
    let end = coxeter::replay(&g, &cert).map_err(engine)?;
    if !end.is_empty() {
        return Err(engine("certificate does not reach the empty word"));
    }
    let mut text = cert.to_lines();
    if !text.is_empty() && !text.ends_with('\n') {
        text.push('\n');
    }
    let value = json!({
        "n": a.n,
        "loop": g.letters(),
        "certificate": cert.moves,
        "verified": true,
    });
    emit(json, value, &text);
    Ok(())
}

fn cells(a: &CellsArgs, json: bool) -> Outcome {
    let census = coxeter::codim2_census(a.n).map_err(engine)?;
    let text = format!("tricky {}\neasy {}\n", census.tricky, census.easy);
    let value = json!({ "n": a.n, "tricky": census.tricky, "easy": census.easy });
    emit(json, value, &text);
    Ok(())
}

fn render(a: &RenderArgs, json: bool) -> Outcome {
    let options = RenderOptions {
        labels: a.labels,
        size: a.size,
        ..RenderOptions::default()
    };
    let svg = geometry::render_svg(&options);
    match &a.out {
        Some(path) => {
            std::fs::write(path, &svg)
                .map_err(|e| engine(format!("cannot write {}: {e}", path.display())))?;
            let text = format!("wrote {}\n", path.display());
            let value = json!({ "out": path.display().to_string(), "bytes": svg.len() });
            emit(json, value, &text);
        }
        None => print!("{svg}"),
    }
    Ok(())
}
