//! Binary entry point; all logic lives in the library's `cli` module.

fn main() {
    std::process::exit(plumb_series::cli::run())
}
