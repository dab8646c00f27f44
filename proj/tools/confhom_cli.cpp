#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "confhom/acceptance.hpp"
#include "confhom/discrete_conf.hpp"
#include "confhom/homology.hpp"
#include "confhom/les.hpp"
#include "confhom/swiatkowski.hpp"

using namespace confhom;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitOverflow = 3;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string render_matrix(const IntMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << ";";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m.get(i, j).get_str();
        }
    }
    return os.str();
}

void print_matrix_block(const IntMatrix& m, const std::string& indent) {
    if (m.rows() == 0 || m.cols() == 0) {
        std::cout << indent << "(" << m.rows() << "x" << m.cols() << ")\n";
        return;
    }
    for (int i = 0; i < m.rows(); ++i) {
        std::cout << indent << "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) std::cout << " ";
            std::cout << m.get(i, j).get_str();
        }
        std::cout << "]\n";
    }
}

struct HomologyOpts {
    std::string graph_file;
    int n = 1;
    std::string engine = "both";
    int max_degree = -1;
    long cell_cap = kDefaultCellCap;
    std::string format = "human";
};

int cmd_homology(const HomologyOpts& opt) {
    Graph g = load_graph_file(opt.graph_file);
    const int dmax = opt.max_degree >= 0 ? std::min(opt.max_degree, opt.n) : opt.n;
    const bool records = opt.format == "records";

    std::vector<std::string> sw_groups, or_groups;
    if (opt.engine == "swiatkowski" || opt.engine == "both") {
        HomologyEngine eng(make_sw(g, opt.n)->complex());
        for (int d = 0; d <= dmax; ++d) sw_groups.push_back(eng.group(d).render());
    }
    if (opt.engine == "oracle" || opt.engine == "both") {
        OracleAnswer oa = oracle_homology(g, opt.n, false, opt.cell_cap);
        for (int d = 0; d <= dmax; ++d)
            or_groups.push_back(d < static_cast<int>(oa.groups.size()) ? oa.groups[d].render()
                                                                       : "0");
    }

    bool agree = true;
    if (opt.engine == "both")
        for (int d = 0; d <= dmax; ++d)
            if (sw_groups[d] != or_groups[d]) agree = false;

    if (records) {
        for (int d = 0; d <= dmax; ++d) {
            if (!sw_groups.empty())
                std::cout << "record=homology engine=swiatkowski n=" << opt.n << " d=" << d
                          << " group=" << sw_groups[d] << "\n";
            if (!or_groups.empty())
                std::cout << "record=homology engine=oracle n=" << opt.n << " d=" << d
                          << " group=" << or_groups[d] << "\n";
        }
        if (opt.engine == "both")
            std::cout << "record=agreement n=" << opt.n << " ok=" << (agree ? "yes" : "no")
                      << "\n";
    } else {
        std::cout << "unordered configuration homology, n = " << opt.n << "\n";
        for (int d = 0; d <= dmax; ++d) {
            std::cout << "  H_" << d << " = ";
            if (opt.engine == "swiatkowski") std::cout << sw_groups[d];
            else if (opt.engine == "oracle") std::cout << or_groups[d];
            else std::cout << sw_groups[d] << "  |  " << or_groups[d];
            std::cout << "\n";
        }
        if (opt.engine == "both")
            std::cout << (agree ? "engines agree" : "ENGINES DISAGREE") << "\n";
    }
    return agree ? kExitPass : kExitVerifyFail;
}

struct LesOpts {
    std::string graph_file;
    std::string vertex;
    std::string half_csv;
    int n = 1;
    std::string format = "human";
};

int cmd_les(const LesOpts& opt) {
    Graph g = load_graph_file(opt.graph_file);
    DeletionInstance inst = build_instance(g, opt.vertex, split_list(opt.half_csv), opt.n);
    LESReport rep = les_verify(inst);
    const bool records = opt.format == "records";

    if (records) {
        for (std::size_t d = 0; d < rep.bgroups.size(); ++d)
            std::cout << "record=group complex=full d=" << d << " group=" << rep.bgroups[d].render()
                      << "\n";
        for (std::size_t d = 0; d < rep.agroups.size(); ++d)
            std::cout << "record=group complex=deleted d=" << d
                      << " group=" << rep.agroups[d].render() << "\n";
        for (std::size_t d = 0; d < rep.wgroups.size(); ++d)
            std::cout << "record=group complex=wedge d=" << d << " group=" << rep.wgroups[d].render()
                      << "\n";
        for (std::size_t i = 0; i < rep.iota_star.size(); ++i)
            std::cout << "record=map kind=restriction d=" << i
                      << " matrix=" << render_matrix(rep.iota_star[i].matrix()) << "\n";
        for (std::size_t i = 0; i < rep.delta.size(); ++i)
            std::cout << "record=map kind=connecting d=" << i
                      << " matrix=" << render_matrix(rep.delta[i].matrix()) << "\n";
        for (std::size_t j = 0; j < rep.alpha.size(); ++j)
            std::cout << "record=map kind=boundary d=" << j
                      << " matrix=" << render_matrix(rep.alpha[j].matrix()) << "\n";
        for (const Verdict* v : rep.verdicts())
            std::cout << "record=verdict name=" << v->name << " status=" << v->status
                      << " detail=" << v->detail << "\n";
        for (const auto& [k, val] : rep.sizes)
            std::cout << "record=size key=" << k << " value=" << val << "\n";
        std::cout << "record=result ok=" << (rep.all_pass() ? "yes" : "no") << "\n";
    } else {
        std::cout << "half-edge deletion at '" << opt.vertex << "', n = " << opt.n << "\n";
        std::cout << "homology (full / deleted / wedge):\n";
        for (std::size_t d = 0; d < rep.bgroups.size(); ++d)
            std::cout << "  H_" << d << ": " << rep.bgroups[d].render() << " / "
                      << rep.agroups[d].render() << " / " << rep.wgroups[d].render() << "\n";
        for (std::size_t i = 0; i < rep.iota_star.size(); ++i) {
            std::cout << "restriction H_" << i << "(deleted) -> H_" << i << "(full):\n";
            print_matrix_block(rep.iota_star[i].matrix(), "  ");
        }
        for (std::size_t i = 0; i < rep.delta.size(); ++i) {
            std::cout << "connecting H_" << i << "(full) -> H_" << i << "(wedge):\n";
            print_matrix_block(rep.delta[i].matrix(), "  ");
        }
        for (std::size_t j = 0; j < rep.alpha.size(); ++j) {
            std::cout << "boundary H_" << j << "(wedge) -> H_" << (static_cast<int>(j) - 1)
                      << "(deleted):\n";
            print_matrix_block(rep.alpha[j].matrix(), "  ");
        }
        for (const Verdict* v : rep.verdicts())
            std::cout << "  " << v->name << ": " << v->status
                      << (v->detail.empty() ? "" : " (" + v->detail + ")") << "\n";
        std::cout << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED") << " ("
                  << rep.seconds << "s)\n";
    }
    return rep.all_pass() ? kExitPass : kExitVerifyFail;
}

struct ContractOpts {
    std::string graph_file;
    std::string edge;
    int n = 1;
    std::string format = "human";
};

int cmd_contract(const ContractOpts& opt) {
    Graph g = load_graph_file(opt.graph_file);
    const Edge& e = g.edge(opt.edge);
    if (e.is_loop()) throw InputError("cannot contract loop '" + opt.edge + "'");
    const std::string kept = std::min(e.end[0], e.end[1]);
    SwPtr dst = make_sw(g, opt.n);
    SwPtr src = make_sw(contract_edge(g, opt.edge).graph, opt.n);
    ChainMap f = sw_contraction(src, dst, opt.edge, kept);
    const bool ok = f.commutes();

    HomologyEngine se(src->complex()), de(dst->complex());
    const bool records = opt.format == "records";
    if (!records)
        std::cout << "contraction of '" << opt.edge << "' (kept '" << kept << "'), n = " << opt.n
                  << "\n";
    for (int d = 0; d <= opt.n; ++d) {
        GroupMap m = induced_map(f, se, de, d);
        if (records) {
            std::cout << "record=map d=" << d << " src=" << m.source().render()
                      << " dst=" << m.target().render() << " iso=" << (m.is_iso() ? "yes" : "no")
                      << " matrix=" << render_matrix(m.matrix()) << "\n";
        } else {
            std::cout << "H_" << d << ": " << m.source().render() << " -> " << m.target().render()
                      << (m.is_iso() ? " (iso)" : "") << "\n";
            print_matrix_block(m.matrix(), "  ");
        }
    }
    if (records)
        std::cout << "record=result verified=" << (ok ? "yes" : "no") << "\n";
    else
        std::cout << (ok ? "chain map verified" : "CHAIN MAP FAILED") << "\n";
    return ok ? kExitPass : kExitVerifyFail;
}

struct VerifyOpts {
    std::string corpus_dir;
    std::string format = "human";
};

int cmd_verify_all(const VerifyOpts& opt) {
    const bool records = opt.format == "records";
    RecordSink sink = [&](const CheckRecord& r) {
        if (records)
            std::cout << "record=check criterion=" << r.criterion << " status=" << r.status
                      << " name=" << r.name << " detail=" << r.detail << "\n";
        else if (r.status != "pass")
            std::cout << "  [" << r.criterion << "] " << r.name << ": " << r.status
                      << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    };
    AcceptanceSummary summary = run_acceptance(opt.corpus_dir, sink);

    bool any = false;
    for (const auto& r : summary.records)
        if (r.criterion >= 1) any = true;
    if (!any) {
        std::cerr << "warning: corpus is empty, nothing verified\n";
        return kExitPass;
    }

    for (int c = 1; c <= 9; ++c) {
        const bool ok = summary.criterion_ok(c);
        if (records) {
            std::cout << "record=criterion id=" << c << " ok=" << (ok ? "yes" : "no")
                      << " pass=" << summary.count(c, "pass") << " fail="
                      << summary.count(c, "fail") << " skipped=" << summary.count(c, "skipped")
                      << " label=" << criterion_label(c) << "\n";
        } else {
            std::cout << "criterion " << c << " (" << criterion_label(c) << "): "
                      << (ok ? "PASS" : "FAIL") << " [" << summary.count(c, "pass") << " pass, "
                      << summary.count(c, "fail") << " fail, " << summary.count(c, "skipped")
                      << " skipped]\n";
        }
    }
    const bool ok = summary.all_ok();
    if (records)
        std::cout << "record=summary ok=" << (ok ? "yes" : "no") << "\n";
    else
        std::cout << (ok ? "all criteria passed" : "VERIFICATION FAILED") << "\n";
    return ok ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homology of unordered configuration spaces of graphs"};
    app.require_subcommand(1);

    HomologyOpts hopt;
    CLI::App* hom = app.add_subcommand("homology", "Homology of the configuration space");
    hom->add_option("graph", hopt.graph_file, "graph file")->required();
    hom->add_option("--n", hopt.n, "number of particles")->required();
    hom->add_option("--engine", hopt.engine, "swiatkowski | oracle | both")
        ->check(CLI::IsMember({"swiatkowski", "oracle", "both"}));
    hom->add_option("--max-degree", hopt.max_degree, "highest degree to report");
    hom->add_option("--cell-cap", hopt.cell_cap, "cell budget for the discretized model");
    hom->add_option("--format", hopt.format, "human | records")
        ->check(CLI::IsMember({"human", "records"}));

    LesOpts lopt;
    CLI::App* les = app.add_subcommand("les", "Verify the deletion long exact sequence");
    les->add_option("graph", lopt.graph_file, "graph file")->required();
    les->add_option("--vertex", lopt.vertex, "vertex carrying the half-edges")->required();
    les->add_option("--half-edges", lopt.half_csv, "comma-separated half-edge ids")->required();
    les->add_option("--n", lopt.n, "number of particles")->required();
    les->add_option("--format", lopt.format, "human | records")
        ->check(CLI::IsMember({"human", "records"}));

    ContractOpts copt;
    CLI::App* con = app.add_subcommand("contract", "Contraction-induced homology maps");
    con->add_option("graph", copt.graph_file, "graph file")->required();
    con->add_option("--edge", copt.edge, "non-loop edge to contract")->required();
    con->add_option("--n", copt.n, "number of particles")->required();
    con->add_option("--format", copt.format, "human | records")
        ->check(CLI::IsMember({"human", "records"}));

    VerifyOpts vopt;
    CLI::App* ver = app.add_subcommand("verify-all", "Run the verification battery on a corpus");
    ver->add_option("corpus", vopt.corpus_dir, "directory of .graph files")->required();
    ver->add_option("--format", vopt.format, "human | records")
        ->check(CLI::IsMember({"human", "records"}));

    try {
        app.parse(argc, argv);
        if (*hom) return cmd_homology(hopt);
        if (*les) return cmd_les(lopt);
        if (*con) return cmd_contract(copt);
        if (*ver) return cmd_verify_all(vopt);
        return kExitInputError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceOverflow& e) {
        std::cerr << "resource overflow: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        std::abort();
    }
}
