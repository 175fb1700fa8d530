#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {:?}", self.stdout))
    }
}

pub fn orbitcalc(args: &[&str]) -> Outcome {
    let output = Command::new(env!("CARGO_BIN_EXE_orbitcalc"))
        .args(args)
        .output()
        .expect("the orbitcalc binary runs");
    Outcome {
        status: output.status.code().expect("exited normally"),
        stdout: String::from_utf8(output.stdout).unwrap(),
        stderr: String::from_utf8(output.stderr).unwrap(),
    }
}

pub fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

pub const DATA_FILES: [&str; 8] = [
    "s4.txt",
    "cp2.txt",
    "cp2bar.txt",
    "s2xs2.txt",
    "cp2_connsum_cp2bar.txt",
    "cp2_connsum_cp2.txt",
    "five_edges.txt",
    "illegal.txt",
];
