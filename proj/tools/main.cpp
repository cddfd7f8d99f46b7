#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  pqc::cli::RunConfig c;
  CLI::App app{"pqc: symmetric-group Hamiltonian simulation toolkit"};
  app.require_subcommand(1);

  auto common = [&c](CLI::App* s) {
    s->add_option("--n", c.n, "number of qudits / degree of S_n");
    s->add_option("--d", c.d, "local dimension");
    s->add_option("--k", c.k, "locality of random elements");
    s->add_option("--t", c.t, "evolution time");
    s->add_option("--eps", c.eps, "target error");
    s->add_option("--seed", c.seed, "seed for random inputs");
    s->add_option("--method", c.method, "exact, lcu-swap or lcu-pauli")
        ->check(CLI::IsMember({"exact", "lcu-swap", "lcu-pauli"}));
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--cap-dense", c.caps.dense, "largest dense matrix dimension");
    s->add_option("--cap-factorial", c.caps.factorial, "largest n! handled densely");
    s->add_option("--out", c.out_path, "write output to a file");
    s->add_option("--f", c.f_path, "algebra element JSON");
    s->add_option("--g", c.g_path, "second algebra element JSON");
    s->add_option("--pauli", c.pauli_path, "Pauli sum JSON");
    s->add_option("--lambda", c.lambda, "partition, e.g. 3+1");
    s->add_option("--perm", c.perm, "permutation in cycle or one-line form");
    s->add_option("--u", c.u, "basis label (lambda,tableau,weight)");
    s->add_option("--v", c.v, "basis label (lambda,tableau,weight)");
    s->add_option("--terms", c.terms, "support size of random elements");
    s->add_option("--n-min", c.n_min, "bench: smallest n");
    s->add_option("--n-max", c.n_max, "bench: largest n");
    s->add_flag("!--no-timing", c.timing, "omit wall-clock fields");
  };

  const char* commands[][2] = {
      {"dims", "Schur-Weyl dimension table"},
      {"irrep", "Young orthogonal matrix of a permutation"},
      {"fft", "Fourier transform over S_n, fast and naive"},
      {"convolve", "group-algebra product and convolution theorem check"},
      {"young-basis", "Young basis of (C^d)^n"},
      {"matelem", "matrix element <u|exp(-itH)|v>"},
      {"bench", "classical transform cost against LCU gate counts"},
      {"verify", "run self-check suites"},
  };
  for (const auto& [name, help] : commands) {
    auto* s = app.add_subcommand(name, help);
    common(s);
    s->callback([&c, s] { c.command = s->get_name(); });
    if (std::string(name) == "verify") {
      s->add_option("--suite", c.suite, "suite name")->check(CLI::IsMember(pqc::cli::suite_names()));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pqc::cli::kUsage;
  }
  return pqc::cli::run(c, std::cout, std::cerr);
}
