// Contract tests for the command-line tool: frozen output bytes and exit
// codes, run through the shell. argv[1] is the path to the tool binary.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the tool with the given arguments; stderr is dropped so frozen stdout
// comparisons stay byte-exact.
RunResult run(const std::string& tool, const std::string& args) {
    RunResult result;
    const std::string cmd = tool + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        std::cerr << "popen failed for: " << cmd << "\n";
        ++failures;
        return result;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void check_exit(const std::string& label, const RunResult& r, int want) {
    if (r.code != want) {
        std::cerr << "[exit] " << label << ": got " << r.code << ", want " << want
                  << "\n--- output ---\n" << r.out << "---\n";
        ++failures;
    }
}

void check_out(const std::string& label, const RunResult& r, const std::string& want) {
    if (r.out != want) {
        std::cerr << "[bytes] " << label << ":\n--- got ---\n" << r.out
                  << "--- want ---\n" << want << "---\n";
        ++failures;
    }
}

void check_contains(const std::string& label, const RunResult& r, const std::string& needle) {
    if (r.out.find(needle) == std::string::npos) {
        std::cerr << "[contains] " << label << ": missing '" << needle
                  << "'\n--- output ---\n" << r.out << "---\n";
        ++failures;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cli_contract_test <path-to-tool>\n";
        return 2;
    }
    const std::string tool = argv[1];

    // --- sequence and period surface ---
    {
        auto r = run(tool, "period --preset pell --prime 7");
        check_exit("period pell 7", r, 0);
        check_out("period pell 7", r, "l=6 beta=1\n");
    }
    {
        auto r = run(tool, "period --a 1 --b 1 --seeds 0,1,5 --prime 7");
        check_exit("period preperiodic", r, 0);
        check_out("period preperiodic", r, "l=16 beta=2 preperiod=1\n");
    }
    {
        auto r = run(tool, "period --preset pell --prime 7 --json");
        check_out(
            "period json", r,
            "{\"spec\":{\"a\":2,\"b\":1,\"c\":0,\"x0\":0,\"x1\":1,\"x2\":2},"
            "\"modulus\":7,\"period\":6,\"zeros\":1,\"preperiod\":0,"
            "\"residues\":[0,1,2,5,5,1]}\n");
    }
    {
        auto r = run(tool, "terms --preset fibonacci --n 8");
        check_out("terms exact", r, "0,1,1,2,3,5,8,13,21\n");
    }
    {
        auto r = run(tool, "terms --preset fibonacci --n 8 --prime 5");
        check_out("terms mod", r, "0,1,1,2,3,0,3,3,1\n");
    }
    {
        auto r = run(tool, "genfun-check --preset lucas --n 20");
        check_exit("genfun-check", r, 0);
        check_out("genfun-check", r, "series matches recurrence on 20 terms\n");
    }
    {
        auto r = run(tool, "dpoly --preset pell --prime 7");
        check_exit("dpoly", r, 0);
        check_out("dpoly", r,
                  "l=6 beta=1\ndelta=x + 2*x^2 + 5*x^3 + 5*x^4 + x^5\n");
    }
    {
        auto r = run(tool, "thm22-check --preset lucas --prime 5 --n 4");
        check_exit("thm22 lucas", r, 0);
        check_out("thm22 lucas", r, "l=4\ngeneral_form=holds\nshort_form=fails\n");
    }
    {
        auto r = run(tool, "thm22-check --preset fibonacci --prime 3 --n 8");
        check_exit("thm22 fibonacci", r, 0);
        check_out("thm22 fibonacci", r, "l=8\ngeneral_form=holds\nshort_form=holds\n");
    }

    // --- code construction, encode, decode ---
    {
        auto r = run(tool, "code --a 2 --prime 7");
        check_exit("code text", r, 0);
        check_out("code text", r,
                  "[n,k,d]=[6,2,5] mds=yes t=2\n"
                  "g=1 + 2*x + 5*x^2 + 5*x^3 + x^4\n"
                  "h=6 + 2*x + x^2\n");
    }
    {
        auto r = run(tool, "code --a 6 --prime 13 --json");
        check_out("code json", r,
                  "{\"n\":6,\"k\":2,\"d\":5,\"mds\":true,\"modulus\":13,"
                  "\"generator\":[1,6,11,7,1],\"check\":[12,6,1]}\n");
        auto again = run(tool, "code --a 6 --prime 13 --json");
        if (r.out != again.out) {
            std::cerr << "[stability] code json differs between runs\n";
            ++failures;
        }
    }
    {
        auto r = run(tool, "encode --a 2 --prime 7 --message 0,3");
        check_exit("encode", r, 0);
        check_out("encode", r, "0,3,6,1,1,3\n");
    }
    {
        auto r = run(tool, "decode --a 2 --prime 7 --word 0,5,6,1,1,6");
        check_exit("decode corrected", r, 0);
        check_out("decode corrected", r,
                  "status=corrected\n"
                  "syndrome=1 + x + 6*x^2 + 4*x^3\n"
                  "shift=1\n"
                  "shifted_syndrome=3 + 2*x^2\n"
                  "error=0,2,0,0,0,3\n"
                  "corrected=0,3,6,1,1,3\n");
    }
    {
        // untrappable pattern: reported honestly, tool itself still succeeds
        auto r = run(tool, "decode --a 2 --prime 7 --word 1,0,1,0,1,0");
        check_exit("decode failure status", r, 0);
        check_out("decode failure status", r,
                  "status=failure\nsyndrome=5*x + 3*x^2 + 2*x^3\n");
    }

    // --- scan ---
    {
        auto r = run(tool, "scan --primes 3,7 --a-max 3");
        check_exit("scan text", r, 0);
        check_out("scan text", r,
                  "   a  pi     l  beta     n  k  d  mds  note\n"
                  "   1   3     8     2     8  2  6   no\n"
                  "   2   3     8     2     8  2  6   no\n"
                  "   3   3     2     1     -  -  -    -  skipped: period 2 leaves no room for a generator\n"
                  "   1   7    16     2    16  2 14   no\n"
                  "   2   7     6     1     6  2  5  yes\n"
                  "   3   7    16     2    16  2 14   no\n");
    }
    {
        auto r = run(tool, "scan --primes 3,7 --a-max 3 --json");
        check_exit("scan json", r, 0);
        check_out("scan json", r,
                  "{\"a\":1,\"prime\":3,\"built\":true,\"l\":8,\"beta\":2,\"n\":8,\"k\":2,\"d\":6,\"mds\":false,\"d_matches_theorem\":true}\n"
                  "{\"a\":2,\"prime\":3,\"built\":true,\"l\":8,\"beta\":2,\"n\":8,\"k\":2,\"d\":6,\"mds\":false,\"d_matches_theorem\":true}\n"
                  "{\"a\":3,\"prime\":3,\"built\":false,\"l\":2,\"beta\":1,\"skipped\":\"period 2 leaves no room for a generator\"}\n"
                  "{\"a\":1,\"prime\":7,\"built\":true,\"l\":16,\"beta\":2,\"n\":16,\"k\":2,\"d\":14,\"mds\":false,\"d_matches_theorem\":true}\n"
                  "{\"a\":2,\"prime\":7,\"built\":true,\"l\":6,\"beta\":1,\"n\":6,\"k\":2,\"d\":5,\"mds\":true,\"d_matches_theorem\":true}\n"
                  "{\"a\":3,\"prime\":7,\"built\":true,\"l\":16,\"beta\":2,\"n\":16,\"k\":2,\"d\":14,\"mds\":false,\"d_matches_theorem\":true}\n");
        auto again = run(tool, "scan --primes 3,7 --a-max 3 --json");
        if (r.out != again.out) {
            std::cerr << "[stability] scan json differs between runs\n";
            ++failures;
        }
    }

    // --- Pell / quaternion surface ---
    {
        auto r = run(tool, "pell --n 5");
        check_out("pell", r, "n=5 P=29 Q=82\n");
    }
    {
        auto r = run(tool, "binet-check --n 25");
        check_exit("binet-check", r, 0);
        check_out("binet-check", r, "closed form matches recurrence for n <= 25\n");
    }
    {
        auto r = run(tool, "matpow --n 2");
        check_exit("matpow", r, 0);
        check_out("matpow", r,
                  "[3, 0, 2*sqrt(2)]\n"
                  "[0, 3+2*sqrt(2), 0]\n"
                  "[2*sqrt(2), 0, 3]\n"
                  "matches_closed_form=yes\n");
    }
    {
        auto r = run(tool, "identities --n 6 --m 6");
        check_exit("identities", r, 0);
        check_out("identities", r,
                  "all four identities hold on n,l in [0,6]x[0,6] (196 checks)\n");
    }
    {
        auto r = run(tool, "genpfl --p 2 --q -1 --n 3");
        check_exit("genpfl", r, 0);
        check_out("genpfl", r, "r=-10\nshift_identity=holds\n");
    }
    {
        auto r = run(tool, "quat-mul --alpha 2 --beta 3 0,1,0,0 0,0,1,0");
        check_exit("quat-mul", r, 0);
        check_out("quat-mul", r, "0,0,0,1\n");
    }
    {
        // leading negatives need the positional separator
        auto r = run(tool, "quat-mul --alpha 1 --beta 1 -- -1,0,0,0 0,1,0,0");
        check_out("quat-mul negative", r, "0,-1,0,0\n");
    }
    {
        auto r = run(tool, "prop37-check --n 2 --m 3 --p 1 --q 2 --pp 1 --qq 1");
        check_exit("prop37 single", r, 0);
        check_out("prop37 single", r,
                  "lhs=13312\nterms=11264,256,16,128,368,1280\nsum=13312\nresidual=0\n");
    }
    {
        // closure fails at alpha = beta = 1: exit 1 plus explicit witnesses
        auto r = run(tool, "order-check --alpha 1 --beta 1 --depth 8 --samples 40");
        check_exit("order-check unit", r, 1);
        check_out("order-check unit", r,
                  "rank=3 generators=17\n"
                  "basis=[1,0,0,0]\n"
                  "basis=[0,8,0,8]\n"
                  "basis=[0,0,8,16]\n"
                  "samples=40 members=5 non_members=35\n"
                  "counterexample: gen[9]*gen[15] = (-20420608,627328,1514240,3654528) not in lattice\n"
                  "counterexample: gen[1]*gen[13] = (-252160,8960,17920,26880) not in lattice\n"
                  "counterexample: gen[1]*gen[12] = (-713216,25344,50688,76032) not in lattice\n"
                  "counterexample: gen[4]*gen[7] = (-291584,8960,21760,52992) not in lattice\n"
                  "counterexample: gen[15]*gen[7] = (-8457856,261120,630400,1518848) not in lattice\n");
    }

    // --- exit-code contract: usage and input errors ---
    check_exit("unknown subcommand", run(tool, "bogus"), 2);
    check_exit("no subcommand", run(tool, ""), 2);
    check_exit("missing required flag", run(tool, "period --preset pell"), 2);
    check_exit("unknown preset", run(tool, "period --preset nope --prime 7"), 2);
    check_exit("preset excludes coefficients",
               run(tool, "period --preset pell --a 1 --prime 7"), 2);
    check_exit("non-prime modulus", run(tool, "code --a 2 --prime 9"), 2);
    check_exit("wrong word length", run(tool, "decode --a 2 --prime 7 --word 1,2"), 2);
    check_exit("bad word syntax", run(tool, "decode --a 2 --prime 7 --word 1,x,0,0,0,0"), 2);
    check_exit("degenerate code", run(tool, "code --a 3 --prime 3"), 2);
    check_exit("help", run(tool, "--help"), 0);
    check_exit("subcommand help", run(tool, "period --help"), 0);
    {
        // closure failure is not specific to alpha = beta = 1
        auto r = run(tool, "order-check --alpha 2 --beta -1 --depth 6 --samples 60");
        check_exit("order-check non-unit parameters", r, 1);
        check_contains("order-check non-unit parameters", r,
                       "samples=60 members=20 non_members=40");
    }

    if (failures == 0) {
        std::cout << "cli contract: all checks passed\n";
        return 0;
    }
    std::cerr << "cli contract: " << failures << " check(s) failed\n";
    return 1;
}
