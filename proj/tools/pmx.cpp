#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pmx/bases.hpp"
#include "pmx/determinant.hpp"
#include "pmx/errors.hpp"
#include "pmx/hermite.hpp"
#include "pmx/io.hpp"
#include "pmx/linearize.hpp"
#include "pmx/oracle.hpp"
#include "pmx/reduce.hpp"

namespace {

constexpr int kExitSingular = 2;
constexpr int kExitParse = 3;
constexpr int kExitSizeGuard = 4;

struct Options {
  std::string file;
  std::string out;
  std::string shift;
  bool check = false;
  bool oracle = false;
};

pmx::PolyMat load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pmx::ParseError(1, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return pmx::parse_pmat(buf.str());
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out);
    if (!out) throw std::runtime_error("cannot write " + opt.out);
    out << text;
  }
}

pmx::Shift shift_or_default(const Options& opt, const pmx::PolyMat& a,
                            bool clamp_to_cdeg) {
  if (!opt.shift.empty()) {
    pmx::Shift s = pmx::parse_shift(opt.shift);
    if (s.size() != (clamp_to_cdeg ? a.cols() : a.rows()))
      throw pmx::ParseError(1, "shift length does not match the matrix");
    return s;
  }
  if (!clamp_to_cdeg) return pmx::Shift(a.rows(), 0);
  std::vector<int> cd = a.cdeg();
  pmx::Shift s(a.cols(), 0);
  for (size_t j = 0; j < s.size(); ++j)
    if (cd[j] != pmx::kNegInfDeg) s[j] = std::max(cd[j], 0);
  return s;
}

pmx::Poly check_nonzero_det(pmx::Poly d) {
  if (d.is_zero()) throw pmx::SingularMatrixError("singular input");
  return d;
}

void run_hnf(const Options& opt) {
  pmx::PolyMat a = load(opt.file);
  pmx::PolyMat h = opt.oracle ? pmx::hermite_oracle(a) : pmx::hermite(a);
  if (opt.check) {
    if (!pmx::is_hermite(h)) throw pmx::StructuralError("check: not a Hermite form");
    if (a.rows() <= 6 && !pmx::equiv_check(a, h))
      throw pmx::StructuralError("check: result not equivalent to the input");
    pmx::Poly d = check_nonzero_det(pmx::determinant(a));
    pmx::Poly prod = pmx::Poly::constant(a.field(), 1);
    for (size_t i = 0; i < h.rows(); ++i) prod = prod * h.at(i, i);
    if (pmx::monic(d).first != prod)
      throw pmx::StructuralError("check: diagonal product != determinant");
  }
  emit(opt, pmx::format_pmat(h));
}

void run_diag(const Options& opt) {
  pmx::PolyMat a = load(opt.file);
  std::vector<pmx::Poly> diag;
  if (opt.oracle) {
    pmx::PolyMat h = pmx::hermite_oracle(a);
    for (size_t i = 0; i < h.rows(); ++i) diag.push_back(h.at(i, i));
  } else {
    diag = pmx::hermite_diagonal(a);
  }
  if (opt.check) {
    pmx::Poly d = check_nonzero_det(pmx::determinant(a));
    pmx::Poly prod = pmx::Poly::constant(a.field(), 1);
    for (const pmx::Poly& p : diag) prod = prod * p;
    if (pmx::monic(d).first != prod)
      throw pmx::StructuralError("check: diagonal product != determinant");
  }
  std::ostringstream os;
  for (const pmx::Poly& p : diag) os << pmx::format_poly(p) << '\n';
  emit(opt, os.str());
}

void run_det(const Options& opt) {
  pmx::PolyMat a = load(opt.file);
  pmx::Poly d = check_nonzero_det(opt.oracle ? pmx::det_oracle(a)
                                             : pmx::determinant(a));
  if (opt.check) {
    std::vector<pmx::Poly> diag = pmx::hermite_diagonal(a);
    pmx::Poly prod = pmx::Poly::constant(a.field(), 1);
    for (const pmx::Poly& p : diag) prod = prod * p;
    if (pmx::monic(d).first != prod)
      throw pmx::StructuralError("check: determinant != diagonal product");
  }
  emit(opt, pmx::format_poly(d) + "\n");
}

void run_reduce(const Options& opt) {
  pmx::PolyMat a = load(opt.file);
  pmx::Shift s = shift_or_default(opt, a, false);
  pmx::PolyMat r = pmx::column_reduce(a, s);
  if (opt.check) {
    if (pmx::cm_rank(r.leading_matrix(s)) != r.cols())
      throw pmx::StructuralError("check: result not shifted column reduced");
    if (pmx::monic(check_nonzero_det(pmx::determinant(r))).first !=
        pmx::monic(check_nonzero_det(pmx::determinant(a))).first)
      throw pmx::StructuralError("check: determinant changed");
  }
  emit(opt, pmx::format_pmat(r));
}

void run_kernel(const Options& opt) {
  pmx::PolyMat a = load(opt.file);
  pmx::Shift s = shift_or_default(opt, a, true);
  std::vector<int> cd = a.cdeg();
  for (size_t j = 0; j < a.cols(); ++j)
    if (cd[j] != pmx::kNegInfDeg && cd[j] > s[j])
      throw pmx::ParseError(1, "shift must dominate the column degrees");
  pmx::PolyMat n = pmx::kernel_basis(a, s);
  if (opt.check && n.cols() > 0) {
    if (!(a * n == pmx::PolyMat(a.field(), a.rows(), n.cols())))
      throw pmx::StructuralError("check: kernel product nonzero");
    if (pmx::cm_rank(n.leading_matrix(s)) != n.cols())
      throw pmx::StructuralError("check: kernel basis not shifted reduced");
  }
  emit(opt, pmx::format_pmat(n));
}

void run_smooth(const Options& opt) {
  pmx::PolyMat a = load(opt.file);
  auto [c, info] = pmx::smooth(a);
  if (opt.check) {
    if (!(info.original_dim <= info.expanded_dim &&
          info.expanded_dim < 3 * info.original_dim))
      throw pmx::StructuralError("check: expansion bound violated");
    if (pmx::determinant(c) != pmx::determinant(a))
      throw pmx::StructuralError("check: determinant not preserved");
  }
  emit(opt, pmx::format_pmat(c));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact linear algebra for univariate polynomial matrices "
               "over prime fields"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_oracle, bool with_shift) {
    sub->add_option("file", opt.file, "matrix file")->required();
    sub->add_option("-o", opt.out, "write output to a file instead of stdout");
    sub->add_flag("--check", opt.check, "verify the result against its axioms");
    if (with_oracle)
      sub->add_flag("--oracle", opt.oracle,
                    "use the brute-force reference (size-guarded)");
    if (with_shift)
      sub->add_option("--shift", opt.shift, "comma-separated integer shift");
  };

  CLI::App* hnf = app.add_subcommand("hnf", "Hermite normal form");
  add_common(hnf, true, false);
  CLI::App* det = app.add_subcommand("det", "determinant");
  add_common(det, true, false);
  CLI::App* diag = app.add_subcommand("diag", "Hermite diagonal entries");
  add_common(diag, true, false);
  CLI::App* reduce = app.add_subcommand("reduce", "shifted column reduction");
  add_common(reduce, false, true);
  CLI::App* kernel = app.add_subcommand("kernel", "shifted minimal kernel basis");
  add_common(kernel, false, true);
  CLI::App* smooth = app.add_subcommand("smooth", "degree-smoothing linearization");
  add_common(smooth, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (hnf->parsed()) run_hnf(opt);
    else if (det->parsed()) run_det(opt);
    else if (diag->parsed()) run_diag(opt);
    else if (reduce->parsed()) run_reduce(opt);
    else if (kernel->parsed()) run_kernel(opt);
    else if (smooth->parsed()) run_smooth(opt);
  } catch (const pmx::SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSingular;
  } catch (const pmx::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const pmx::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
