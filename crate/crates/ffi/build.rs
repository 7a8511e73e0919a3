use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR is set by cargo");
    let include = PathBuf::from(&crate_dir).join("include");
    std::fs::create_dir_all(&include).expect("create include directory");
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    cbindgen::generate(&crate_dir)
        .expect("Unable to generate bindings")
        .write_to_file(include.join("sympair.h"));
}
