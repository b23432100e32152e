//! Command-line surface. Exit codes: 0 success (and "yes" answers),
//! 1 "no" answers (not congruent, nontrivial compositions, not converged),
//! 2 internal disagreement between independent strategies (a correctness
//! alarm, never swallowed), 64 usage and parse errors.

use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gsbasis::{complete, format_rules, parse_rule_file, verify_gs, CompletionBounds};
use crate::oracle::{congruence_class_with_limit, congruent, count_classes};
use crate::rewriting::{
    chinese_rules, is_irreducible_chinese, normalize_chinese, normalize_chinese_with_steps,
};
use crate::staircase::{insertion_normal_form, Staircase};
use crate::words::{parse_word, Alphabet, Letter, Word};

#[derive(Parser)]
#[command(
    name = "chinese-monoid",
    about = "Normal forms, Gröbner–Shirshov verification, and completion for the Chinese monoid",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    /// Leftmost rewriting with the rule schemas
    Rewriting,
    /// Staircase insertion
    Insertion,
    /// Both routes, asserting agreement
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a word
    Normalize {
        #[arg(short = 'n', long = "alphabet", value_name = "N", value_parser = alphabet_size())]
        n: u32,
        word: String,
        /// Which strategy computes the normal form
        #[arg(long, value_enum, default_value = "both")]
        via: Via,
    },
    /// Print the staircase exponent table of a word and its spelled normal form
    Staircase {
        #[arg(short = 'n', long = "alphabet", value_name = "N", value_parser = alphabet_size())]
        n: u32,
        word: String,
    },
    /// Decide whether two words are congruent (exit 0 yes, 1 no)
    Equal {
        #[arg(short = 'n', long = "alphabet", value_name = "N", value_parser = alphabet_size())]
        n: u32,
        u: String,
        v: String,
        /// Decide by breadth-first closure instead of normal forms
        #[arg(long)]
        oracle: bool,
    },
    /// List (or count) the irreducible words of one length
    Irr {
        #[arg(short = 'n', long = "alphabet", value_name = "N", value_parser = alphabet_size())]
        n: u32,
        #[arg(long)]
        len: usize,
        /// Print only the count
        #[arg(long)]
        count: bool,
    },
    /// Check every ambiguity of a rule set (exit 0 iff all compositions trivial)
    Verify {
        #[arg(short = 'n', long = "alphabet", value_name = "N", value_parser = alphabet_size())]
        n: u32,
        /// Rule file; the built-in Chinese rules when absent
        #[arg(long)]
        rules: Option<PathBuf>,
    },
    /// Run bounded completion on a rule set (exit 0 iff converged)
    Complete {
        #[arg(short = 'n', long = "alphabet", value_name = "N", value_parser = alphabet_size())]
        n: u32,
        #[arg(long)]
        rules: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        max_rules: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 100)]
        max_iters: usize,
    },
    /// Count the congruence classes of one length layer
    Classes {
        #[arg(short = 'n', long = "alphabet", value_name = "N", value_parser = alphabet_size())]
        n: u32,
        #[arg(long)]
        len: usize,
        /// Also check each class holds exactly one irreducible word
        #[arg(long)]
        check: bool,
    },
    /// Time the rewriting and insertion routes on random words
    Bench {
        #[arg(short = 'n', long = "alphabet", value_name = "N", value_parser = alphabet_size())]
        n: u32,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn alphabet_size() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

/// A failed run: either bad input (exit 64) or an internal disagreement
/// between strategies (exit 2).
enum Failure {
    Usage(String),
    Alarm(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Alarm(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Alarm(m) => m,
        }
    }
}

fn usage(err: impl std::fmt::Display) -> Failure {
    Failure::Usage(err.to_string())
}

/// Parses the arguments and runs one subcommand, returning the process
/// exit code. Results go to stdout one per line; diagnostics to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = err.print();
            return code;
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}

fn run_command(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Normalize { n, word, via } => {
            let alphabet = Alphabet::new(n);
            let word = parse_word(&word, alphabet).map_err(usage)?;
            let nf = match via {
                Via::Rewriting => normalize_chinese(&word),
                Via::Insertion => insertion_normal_form(&word),
                Via::Both => {
                    let by_rewriting = normalize_chinese(&word);
                    let by_insertion = insertion_normal_form(&word);
                    if by_rewriting != by_insertion {
                        return Err(Failure::Alarm(format!(
                            "normal forms disagree on {word}: rewriting gives {by_rewriting}, insertion gives {by_insertion}"
                        )));
                    }
                    by_rewriting
                }
            };
            println!("{nf}");
            Ok(0)
        }
        Command::Staircase { n, word } => {
            let alphabet = Alphabet::new(n);
            let word = parse_word(&word, alphabet).map_err(usage)?;
            let staircase = Staircase::from_word(&word);
            print!("{staircase}");
            println!("{}", staircase.to_word());
            Ok(0)
        }
        Command::Equal { n, u, v, oracle } => {
            let alphabet = Alphabet::new(n);
            let u = parse_word(&u, alphabet).map_err(usage)?;
            let v = parse_word(&v, alphabet).map_err(usage)?;
            let equal = if oracle {
                congruent(&u, &v).map_err(usage)?
            } else {
                normalize_chinese(&u) == normalize_chinese(&v)
            };
            println!("{equal}");
            Ok(if equal { 0 } else { 1 })
        }
        Command::Irr { n, len, count } => {
            let alphabet = Alphabet::new(n);
            let mut total = 0u64;
            stream_irreducible(alphabet, len, &mut |letters| {
                total += 1;
                if !count {
                    println!("{}", Word::new(letters.to_vec(), alphabet));
                }
            });
            if count {
                println!("{total}");
            }
            Ok(0)
        }
        Command::Verify { n, rules } => {
            let alphabet = Alphabet::new(n);
            let system = match rules {
                Some(path) => load_rules(&path, alphabet)?,
                None => chinese_rules(alphabet),
            };
            let report = verify_gs(&system);
            for item in &report.nontrivial {
                println!(
                    "NONTRIVIAL {} {} {}",
                    item.ambiguity.overlap, item.p_reduced, item.q_reduced
                );
            }
            println!("{report}");
            Ok(if report.is_basis() { 0 } else { 1 })
        }
        Command::Complete {
            n,
            rules,
            max_rules,
            max_len,
            max_iters,
        } => {
            let alphabet = Alphabet::new(n);
            let initial = load_rules(&rules, alphabet)?;
            let bounds = CompletionBounds {
                max_rules,
                max_word_len: max_len,
                max_iterations: max_iters,
            };
            let outcome = complete(&initial, &bounds);
            print!("{}", format_rules(outcome.system.rules()));
            if outcome.converged {
                eprintln!("converged in {} passes", outcome.passes);
                Ok(0)
            } else {
                eprintln!("not converged after {} passes", outcome.passes);
                Ok(1)
            }
        }
        Command::Classes { n, len, check } => {
            let alphabet = Alphabet::new(n);
            let classes = count_classes(alphabet, len).map_err(usage)?;
            println!("{classes}");
            if check {
                check_transversal(alphabet, len)?;
                println!("transversal: ok");
            }
            Ok(0)
        }
        Command::Bench {
            n,
            len,
            count,
            seed,
        } => run_bench(Alphabet::new(n), len, count, seed),
    }
}

fn load_rules(path: &std::path::Path, alphabet: Alphabet) -> Result<crate::rewriting::RewriteSystem, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let rules = parse_rule_file(&text, alphabet)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    crate::rewriting::RewriteSystem::new(alphabet, rules)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Streams the irreducible words of exactly `len` letters in lexicographic
/// order. Prefixes of irreducible words are irreducible, so the walk
/// extends letter by letter and only checks the redex windows that end at
/// the newest letter.
fn stream_irreducible(alphabet: Alphabet, len: usize, emit: &mut dyn FnMut(&[Letter])) {
    fn extend(
        prefix: &mut Vec<Letter>,
        alphabet: Alphabet,
        len: usize,
        emit: &mut dyn FnMut(&[Letter]),
    ) {
        if prefix.len() == len {
            emit(prefix);
            return;
        }
        for value in 1..=alphabet.size() {
            prefix.push(Letter(value));
            if newest_suffix_irreducible(prefix) {
                extend(prefix, alphabet, len, emit);
            }
            prefix.pop();
        }
    }
    let mut prefix = Vec::with_capacity(len);
    extend(&mut prefix, alphabet, len, emit);
}

/// Whether appending the last letter created no redex. Only windows that
/// end at the last position are new; earlier windows were checked when the
/// shorter prefix was accepted.
fn newest_suffix_irreducible(letters: &[Letter]) -> bool {
    let end = letters.len();
    for start in end.saturating_sub(4)..end {
        if !crate::rewriting::is_irreducible_chinese(&window_word(letters, start, end)) {
            return false;
        }
    }
    true
}

fn window_word(letters: &[Letter], start: usize, end: usize) -> Word {
    // alphabet size only gates construction; reuse a wide one
    Word::new(letters[start..end].to_vec(), Alphabet::new(u32::MAX))
}

/// Confirms that every congruence class of the layer contains exactly one
/// irreducible word, which is the normal form of every member.
fn check_transversal(alphabet: Alphabet, len: usize) -> Result<(), Failure> {
    let n = alphabet.size() as u64;
    let total = n.pow(len as u32);
    let mut visited = vec![false; total as usize];
    let encode = |letters: &[Letter]| -> u64 {
        letters
            .iter()
            .rev()
            .fold(0u64, |acc, l| acc * n + (l.0 - 1) as u64)
    };
    for code in 0..total {
        if visited[code as usize] {
            continue;
        }
        let mut c = code;
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            letters.push(Letter((c % n) as u32 + 1));
            c /= n;
        }
        let word = Word::new(letters, alphabet);
        let class = congruence_class_with_limit(&word, len).map_err(usage)?;
        let irreducible: Vec<&Word> = class
            .members()
            .iter()
            .filter(|m| is_irreducible_chinese(m))
            .collect();
        if irreducible.len() != 1 {
            return Err(Failure::Alarm(format!(
                "class of {word} holds {} irreducible words, expected exactly one",
                irreducible.len()
            )));
        }
        let transversal = irreducible[0];
        for member in class.members() {
            if &normalize_chinese(member) != transversal {
                return Err(Failure::Alarm(format!(
                    "normal form of {member} differs from the irreducible word {transversal} of its class"
                )));
            }
            visited[encode(member.letters()) as usize] = true;
        }
    }
    Ok(())
}

fn run_bench(alphabet: Alphabet, len: usize, count: usize, seed: u64) -> Result<i32, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Word> = (0..count)
        .map(|_| {
            let letters = (0..len)
                .map(|_| Letter(rng.random_range(1..=alphabet.size())))
                .collect();
            Word::new(letters, alphabet)
        })
        .collect();

    // agreement first; timing means nothing if the routes disagree
    for word in &words {
        let by_rewriting = normalize_chinese(word);
        let by_insertion = insertion_normal_form(word);
        if by_rewriting != by_insertion {
            return Err(Failure::Alarm(format!(
                "normal forms disagree on {word}: rewriting gives {by_rewriting}, insertion gives {by_insertion}"
            )));
        }
    }

    let started = Instant::now();
    let mut rewrite_steps = 0u64;
    for word in &words {
        let (_, trace) = normalize_chinese_with_steps(word);
        rewrite_steps += (trace.len() - 1) as u64;
    }
    let rewriting_elapsed = started.elapsed().as_secs_f64();

    let started = Instant::now();
    let mut insert_steps = 0u64;
    for word in &words {
        let _ = Staircase::from_word(word);
        insert_steps += word.len() as u64;
    }
    let insertion_elapsed = started.elapsed().as_secs_f64();

    let denom = count.max(1) as f64;
    println!(
        "rewriting {:.1} {:.3}",
        denom / rewriting_elapsed.max(1e-9),
        rewrite_steps as f64 / denom
    );
    println!(
        "insertion {:.1} {:.3}",
        denom / insertion_elapsed.max(1e-9),
        insert_steps as f64 / denom
    );
    Ok(0)
}
