//! Replays the worked examples and prints one line per item.
use lojasiewicz::cli::worked_examples;
use lojasiewicz::multiplicity::DEFAULT_SEED;

fn main() {
    let items = worked_examples(DEFAULT_SEED);
    for item in &items {
        println!(
            "{} {}: {}",
            if item.passed { "PASS" } else { "FAIL" },
            item.name,
            item.detail
        );
    }
    if items.iter().any(|i| !i.passed) {
        std::process::exit(1);
    }
}
