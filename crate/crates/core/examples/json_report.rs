//! Driving the command layer from code and reading its JSON report back.
use clap::Parser;
use lojasiewicz::cli::{run_command, CommandRequest, Report};

fn main() {
    let req = CommandRequest::parse_from([
        "lojex",
        "exponent",
        "--weights",
        "1,2,3",
        "--function",
        "x1*x3+x2^2+x1^2*x2",
        "--json",
    ]);
    let out = run_command(&req);
    let text = out.render(true);
    print!("{text}");
    let back: Report = serde_json::from_str(&text).expect("valid report");
    assert_eq!(back, out.report);
    println!("exit code {}", out.exit_code);
}
