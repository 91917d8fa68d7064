// Driving the command line from code, capturing a JSON report.

use hoffman_limits::cli::run;

pub fn run_example() -> hoffman_limits::Result<()> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["hoffman-limits", "table", "laplacian", "--n-max", "4", "--format", "json"];
    let code = run(args, &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
    if code != 0 {
        return Err(hoffman_limits::Error::Domain(format!("exit code {code}")));
    }
    Ok(())
}

fn main() -> hoffman_limits::Result<()> {
    run_example()
}
