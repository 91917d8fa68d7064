//! Every example runs to completion.

#[allow(dead_code)]
mod wheel_radius {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/wheel_radius.rs"));
}

#[test]
fn wheel_radius_runs() {
    wheel_radius::run_example().expect("wheel_radius example should run");
}

#[allow(dead_code)]
mod limit_tables {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/limit_tables.rs"));
}

#[test]
fn limit_tables_runs() {
    limit_tables::run_example().expect("limit_tables example should run");
}

#[allow(dead_code)]
mod psi_closed_form {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/psi_closed_form.rs"));
}

#[test]
fn psi_closed_form_runs() {
    psi_closed_form::run_example().expect("psi_closed_form example should run");
}

#[allow(dead_code)]
mod convergence {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/convergence.rs"));
}

#[test]
fn convergence_runs() {
    convergence::run_example().expect("convergence example should run");
}

#[allow(dead_code)]
mod laplacian_limits {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/laplacian_limits.rs"));
}

#[test]
fn laplacian_limits_runs() {
    laplacian_limits::run_example().expect("laplacian_limits example should run");
}

#[allow(dead_code)]
mod internal_paths {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/internal_paths.rs"));
}

#[test]
fn internal_paths_runs() {
    internal_paths::run_example().expect("internal_paths example should run");
}

#[allow(dead_code)]
mod pendant_limits {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pendant_limits.rs"));
}

#[test]
fn pendant_limits_runs() {
    pendant_limits::run_example().expect("pendant_limits example should run");
}

#[allow(dead_code)]
mod verify_lemmas {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_lemmas.rs"));
}

#[test]
fn verify_lemmas_runs() {
    verify_lemmas::run_example().expect("verify_lemmas example should run");
}

#[allow(dead_code)]
mod cli_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_report.rs"));
}

#[test]
fn cli_report_runs() {
    cli_report::run_example().expect("cli_report example should run");
}
