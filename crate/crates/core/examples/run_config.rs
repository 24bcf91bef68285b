//! Runs the dead-end experiment from an inline config, as the `tlog` binary does.
//!
//! cargo run --release --example run_config

use tlog::experiment::{cmd_deadends, ExperimentConfig};

fn main() {
    let dir = std::env::temp_dir().join("tlog-run-config");
    let text = format!(
        "[genset]\nkind = \"bound\"\n[deadends]\nradii = [4, 5, 6]\n[run]\nout = {:?}\n",
        dir.display().to_string()
    );
    let cfg = ExperimentConfig::parse(&text).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    });
    match cmd_deadends(&cfg) {
        Ok(out) => {
            for f in out.files {
                print!("{}", std::fs::read_to_string(f).expect("written"));
            }
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
