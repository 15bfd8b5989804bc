#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qmp/lsq_cramer.hpp"
#include "qmp/oracle.hpp"
#include "qmp/pinv.hpp"
#include "qmp/rowcol_det.hpp"

/* Front door for the exact quaternion matrix engine. Every result is printed
   as exact rational text; --float appends decimal renderings on '#' comment
   lines so matrix output stays machine-parseable either way.

   Exit codes: 0 success, 1 input parse error, 2 dimension mismatch,
   3 invalid operation, 4 size cap exceeded, 5 self-test or verification
   failure. */

namespace {

using namespace qmp;

bool g_float = false;

std::string float_tuple(const Quaternion& q) {
    std::ostringstream os;
    os << '(' << to_double(q.w) << ", " << to_double(q.x) << ", " << to_double(q.y) << ", "
       << to_double(q.z) << ')';
    return os.str();
}

void print_float_rows(const QMatrix& A) {
    for (std::size_t i = 1; i <= A.rows(); ++i) {
        std::cout << "# ~";
        for (std::size_t j = 1; j <= A.cols(); ++j) std::cout << ' ' << float_tuple(A.at(i, j));
        std::cout << '\n';
    }
}

void print_matrix(const QMatrix& A) {
    std::cout << format_qmat(A);
    if (g_float) print_float_rows(A);
}

void print_quaternion(const Quaternion& q) {
    std::cout << format_quaternion(q) << '\n';
    if (g_float) std::cout << "# ~ " << float_tuple(q) << '\n';
}

void print_rational(const Rational& r) {
    std::cout << to_string(r) << '\n';
    if (g_float) std::cout << "# ~ " << to_double(r) << '\n';
}

int run_det(const std::string& mode, std::size_t index, const std::string& file) {
    const QMatrix A = read_qmat_file(file);
    print_quaternion(mode == "rdet" ? row_det(A, index) : col_det(A, index));
    return 0;
}

int run_ddet(const std::string& file) {
    print_rational(double_det(read_qmat_file(file)));
    return 0;
}

int run_rank(const std::string& file) {
    std::cout << rank_of(read_qmat_file(file)) << '\n';
    return 0;
}

int run_charpoly(const std::string& file) {
    const RealPolynomial p = char_poly(read_qmat_file(file));
    std::cout << p.to_string() << '\n';
    if (g_float) {
        std::cout << "# ~ coefficients";
        for (const Rational& c : p.coeffs) std::cout << ' ' << to_double(c);
        std::cout << '\n';
    }
    return 0;
}

int run_pinv(const std::string& method, const std::string& file, const std::string& out) {
    const QMatrix A = read_qmat_file(file);
    const PinvResult r = method == "cdet"   ? mp_inverse_cdet(A)
                         : method == "rdet" ? mp_inverse_rdet(A)
                                            : mp_inverse(A);
    std::cout << "# method = " << to_string(r.method) << '\n';
    std::cout << "# rank = " << r.rank << '\n';
    std::cout << "# denominator = " << to_string(r.denominator) << '\n';
    print_matrix(r.pinv);
    if (!out.empty()) write_qmat_file(out, r.pinv);
    return 0;
}

int run_proj(const std::string& which, const std::string& file) {
    const QMatrix A = read_qmat_file(file);
    print_matrix(which == "P" ? projection_P(A) : projection_Q(A));
    return 0;
}

int run_solve(const std::string& side, const std::string& method, const std::string& a_file,
              const std::string& y_file) {
    const QMatrix A = read_qmat_file(a_file);
    const QMatrix y = read_qmat_file(y_file);
    const Side s = side == "left" ? Side::Left : Side::Right;

    if (method == "matrix") {
        const LsqSolution sol = solve_matrix_method(A, y, s);
        std::cout << "# method = " << to_string(sol.method) << '\n';
        std::cout << "# residual-norm-sq = " << to_string(sol.residual_norm_sq) << '\n';
        print_matrix(sol.solution);
        return 0;
    }

    const LsqSolution cr = s == Side::Left ? lsq_left(A, y) : lsq_right(A, y);
    if (method == "both") {
        const LsqSolution mm = solve_matrix_method(A, y, s);
        if (mm.solution != cr.solution || mm.residual_norm_sq != cr.residual_norm_sq) {
            std::cerr << "MISMATCH: Cramer and matrix-method solutions disagree\n";
            return 5;
        }
        std::cout << "# method = " << to_string(cr.method) << " (matrix method agrees)\n";
    } else {
        std::cout << "# method = " << to_string(cr.method) << '\n';
    }
    std::cout << "# residual-norm-sq = " << to_string(cr.residual_norm_sq) << '\n';
    print_matrix(cr.solution);
    return 0;
}

int run_verify(const std::string& a_file, const std::string& x_file) {
    const QMatrix A = read_qmat_file(a_file);
    const QMatrix X = read_qmat_file(x_file);
    const PenroseReport rep = verify_penrose(A, X);
    std::cout << (rep.ax_hermitian ? "OK" : "FAIL") << " (AX)* = AX\n";
    std::cout << (rep.xa_hermitian ? "OK" : "FAIL") << " (XA)* = XA\n";
    std::cout << (rep.reproduces_a ? "OK" : "FAIL") << " AXA = A\n";
    std::cout << (rep.reproduces_x ? "OK" : "FAIL") << " XAX = X\n";
    return rep.all_ok() ? 0 : 5;
}

QMatrix example_matrix() {
    const char* text =
        "3 4\n"
        "i -k j 1\n"
        "2i j 1 k\n"
        "-1 j k i\n";
    return parse_qmat(text);
}

/* Reproduces the worked left system x.A = y with embedded expected values;
   any mismatch flips the exit code to 5. */
int run_example() {
    int bad = 0;
    const auto flag = [&bad](bool ok) -> const char* {
        if (!ok) ++bad;
        return ok ? "  [ok]" : "  [MISMATCH]";
    };

    const QMatrix A = example_matrix();
    QMatrix y(1, 4);
    y.at(1, 1) = parse_quaternion("i");
    y.at(1, 2) = parse_quaternion("j");
    y.at(1, 3) = parse_quaternion("k");
    y.at(1, 4) = parse_quaternion("1");

    std::cout << "left system x.A = y with y = i j k 1\n\nA =\n" << format_qmat(A);

    const QMatrix As = hermitian_adjoint(A);
    std::cout << "\nA* =\n" << format_qmat(As);

    const QMatrix G = mat_mul(A, As);
    std::cout << "\nAA* =\n" << format_qmat(G);

    const std::size_t rank = rank_of(A);
    std::cout << "\nrank = " << rank << flag(rank == 2) << '\n';

    const Rational minors = principal_minor_sum(G, 2);
    std::cout << "sum of principal 2x2 minors = " << to_string(minors)
              << flag(minors == Rational(42)) << '\n';

    const PinvResult r = mp_inverse(A);
    const Quaternion r11 = q_scale(Rational(42), r.pinv.at(1, 1));
    std::cout << "r11 = " << format_quaternion(r11)
              << flag(format_quaternion(r11) == "-2-3i-2j-2k") << '\n';

    const QMatrix expected_num = parse_qmat(
        "4 3\n"
        "-2-3i-2j-2k 2-12i+2j+2k -3+2i+2j-2k\n"
        "1+i+2j+6k -2+2i-6j-4k 1-i-6j+2k\n"
        "-2-i-6j-k 6-2i+4j+2k -1+2i+j-6k\n"
        "6+i+j+2k -4+2i-2j-6k 1-6i-2j+k\n");
    const QMatrix num = scalar_mul(Quaternion(Rational(42)), r.pinv);
    std::cout << "\nA+ = 1/42 *\n" << format_qmat(num) << flag(num == expected_num) << '\n';

    const auto row_text = [](const QMatrix& v) {
        std::string s;
        for (std::size_t j = 1; j <= v.cols(); ++j) {
            if (j > 1) s += ' ';
            s += format_quaternion(v.at(1, j));
        }
        return s;
    };

    const std::string x_expected = "8+11i+3j-3k 12-4i-8j 11-8i+3j+3k";

    const LsqSolution mm = solve_matrix_method(A, y, Side::Left);
    const QMatrix mm42 = scalar_mul(Quaternion(Rational(42)), mm.solution);
    std::cout << "\nmatrix method: x0 = y.A+ = 1/42 * ( " << row_text(mm42) << " )"
              << flag(row_text(mm42) == x_expected) << '\n';

    const QMatrix z = mat_mul(y, As);
    std::cout << "z = " << row_text(z) << flag(row_text(z) == "2+2i 3 2-2i") << '\n';

    const LsqSolution cr = lsq_left(A, y);
    const QMatrix cr42 = scalar_mul(Quaternion(Rational(42)), cr.solution);
    std::cout << "Cramer's rule: x0 = 1/42 * ( " << row_text(cr42) << " )"
              << flag(row_text(cr42) == x_expected) << '\n';

    if (bad) {
        std::cout << "\nSELF-TEST FAILED (" << bad << " mismatch(es))\n";
        return 5;
    }
    std::cout << "\nself-test passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quaternion matrix calculator"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--float", g_float, "append decimal renderings as comment lines");

    std::string mode, file, out, method = "auto", which, side, a_file, x_file, y_file;
    std::size_t index = 1;

    CLI::App* det = app.add_subcommand("det", "row or column determinant");
    det->add_option("--mode", mode, "rdet or cdet")
        ->required()
        ->check(CLI::IsMember({"rdet", "cdet"}));
    det->add_option("--index", index, "anchor row/column (1-based)")->required();
    det->add_option("file", file, "input .qmat")->required();

    CLI::App* ddet = app.add_subcommand("ddet", "double determinant det(A*A)");
    ddet->add_option("file", file, "input .qmat")->required();

    CLI::App* rank = app.add_subcommand("rank", "rank by principal minors of A*A");
    rank->add_option("file", file, "input .qmat")->required();

    CLI::App* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse");
    pinv->add_option("--method", method, "cdet, rdet, or auto")
        ->check(CLI::IsMember({"cdet", "rdet", "auto"}));
    pinv->add_option("-o,--output", out, "write result to this .qmat file");
    pinv->add_option("file", file, "input .qmat")->required();

    CLI::App* proj = app.add_subcommand("proj", "orthogonal projector A+A (P) or AA+ (Q)");
    proj->add_option("which", which, "P or Q")->required()->check(CLI::IsMember({"P", "Q"}));
    proj->add_option("file", file, "input .qmat")->required();

    CLI::App* solve = app.add_subcommand("solve", "least-squares solution of x.A=y or A.x=y");
    solve->add_option("--side", side, "left or right")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    std::string solve_method = "cramer";
    solve->add_option("--method", solve_method, "cramer, matrix, or both")
        ->check(CLI::IsMember({"cramer", "matrix", "both"}));
    solve->add_option("a_file", a_file, "coefficient matrix .qmat")->required();
    solve->add_option("y_file", y_file, "right-hand side .qmat")->required();

    CLI::App* verify = app.add_subcommand("verify", "check the four Penrose conditions");
    verify->add_option("a_file", a_file, "matrix .qmat")->required();
    verify->add_option("x_file", x_file, "candidate inverse .qmat")->required();

    CLI::App* charpoly = app.add_subcommand("charpoly", "characteristic polynomial (Hermitian)");
    charpoly->add_option("file", file, "input .qmat")->required();

    CLI::App* example = app.add_subcommand("example", "built-in worked example with self-test");

    CLI11_PARSE(app, argc, argv);

    try {
        if (det->parsed()) return run_det(mode, index, file);
        if (ddet->parsed()) return run_ddet(file);
        if (rank->parsed()) return run_rank(file);
        if (pinv->parsed()) return run_pinv(method, file, out);
        if (proj->parsed()) return run_proj(which, file);
        if (solve->parsed()) return run_solve(side, solve_method, a_file, y_file);
        if (verify->parsed()) return run_verify(a_file, x_file);
        if (charpoly->parsed()) return run_charpoly(file);
        if (example->parsed()) return run_example();
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.column;
        std::cerr << ": " << e.what() << '\n';
        return 1;
    } catch (const IOError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 1;
    } catch (const DimensionMismatch& e) {
        std::cerr << "dimension mismatch: " << e.what() << '\n';
        return 2;
    } catch (const SizeCapExceeded& e) {
        std::cerr << "size cap exceeded: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "invalid operation: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
