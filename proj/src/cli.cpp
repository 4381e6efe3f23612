#include "nlom/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlom/clause.hpp"
#include "nlom/errors.hpp"
#include "nlom/json_io.hpp"
#include "nlom/markup.hpp"
#include "nlom/schema.hpp"
#include "nlom/sentence.hpp"

namespace nlom {
namespace {

// Environment trouble (unreadable input, unwritable dump) exits 2; domain
// rejections (markup, schema, model) exit 1.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Write to a sibling temp file and rename over the target, so a failure
// mid-write never leaves a truncated dump at the destination.
void write_atomic(const std::string& path, const std::string& body) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp);
        out << body;
        out.flush();
        if (!out) {
            out.close();
            std::remove(tmp.c_str());
            throw IoError("write failed for " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move " + tmp + " to " + path);
    }
}

// A directory argument stands for its *.nlml files, sorted for stable
// output; anything else is taken verbatim.
std::vector<std::string> expand_inputs(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (const std::string& a : args) {
        std::error_code ec;
        if (!std::filesystem::is_directory(a, ec)) {
            out.push_back(a);
            continue;
        }
        std::vector<std::string> batch;
        for (const auto& entry : std::filesystem::directory_iterator(a))
            if (entry.is_regular_file() && entry.path().extension() == ".nlml")
                batch.push_back(entry.path().string());
        std::sort(batch.begin(), batch.end());
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

bool is_bare_phrase(Mood m) {
    return m == Mood::Np || m == Mood::About || m == Mood::Adj ||
           m == Mood::Circumstances;
}

// --punctuate: terminate statements with "."; texts already carrying their
// mark ("?", "!") are left alone, as are bare phrases.
std::string with_period(const std::string& text) {
    if (text.empty()) return text;
    const char last = text.back();
    if (last == '?' || last == '!' || last == '.') return text;
    return text + ".";
}

// Parse + validate + build the model. Validation issues are reported to err
// one per line before the throw, so callers only add a summary.
Sentence load_sentence(const std::string& path, std::ostream& err) {
    const std::string text = slurp(path);
    const MarkupNode root = parse_markup(text);
    const ValidationReport report = validate_schema(root);
    if (!report.ok) {
        for (const Issue& issue : report.issues)
            err << path << ": " << issue.path << ": " << to_string(issue.code)
                << ": " << issue.message << "\n";
        throw ModelError(ModelErrorCode::SchemaViolation,
                         "document fails schema validation");
    }
    return parse_sentence(root);
}

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void each_simple(const Sentence& s,
                 const std::function<void(const SimpleSentence&)>& fn) {
    std::visit(
        overloaded{
            [&](const SimpleSentence& ss) { fn(ss); },
            [&](const ComplexSentence& cx) {
                fn(cx.sub);
                fn(cx.main);
            },
            [&](const CompoundSentence& cp) {
                for (const CompleteSentence& cs : cp.complete_sentences) {
                    if (cs.sub) fn(*cs.sub);
                    fn(cs.main);
                }
            },
            [&](const CompoundComplexSentence& cc) {
                fn(cc.sub);
                for (const CompleteSentence& cs : cc.main.complete_sentences) {
                    if (cs.sub) fn(*cs.sub);
                    fn(cs.main);
                }
            }},
        s);
}

bool cmd_validate(const std::string& path, std::ostream& out,
                  std::ostream& err) {
    const std::string text = slurp(path); // IoError propagates: exit 2
    MarkupNode root;
    try {
        root = parse_markup(text);
    } catch (const MarkupError& e) {
        err << path << ": markup error: " << e.what() << "\n";
        return false;
    }
    const ValidationReport report = validate_schema(root);
    if (report.ok) {
        out << path << ": ok\n";
        return true;
    }
    for (const Issue& issue : report.issues)
        out << path << ": " << issue.path << ": " << to_string(issue.code)
            << ": " << issue.message << "\n";
    return false;
}

void cmd_parse(const Sentence& s, bool punctuate, std::ostream& out) {
    std::string text = core_of(s).text;
    if (punctuate && !is_bare_phrase(core_of(s).mood)) text = with_period(text);
    out << text << "\n" << core_of(s).description << "\n";
}

void cmd_decompose(const Sentence& s, bool punctuate, std::ostream& out) {
    const DecompositionResult result = decompose(s);
    for (const auto& member : result.sentences)
        std::visit(
            [&](const auto& m) {
                out << (punctuate ? with_period(m.core.text) : m.core.text)
                    << "\n";
            },
            member);
    out << "relation: " << to_string(result.relation) << "\n";
}

void cmd_implied(const Sentence& s, bool punctuate, std::ostream& out) {
    each_simple(s, [&](const SimpleSentence& ss) {
        for (const NounClause& nc : ss.noun_clauses)
            out << to_string(nc.clause_type) << "\t" << nc.base.core.text
                << "\t"
                << (punctuate ? with_period(nc.implied_text) : nc.implied_text)
                << "\n";
        for (const RelativeClause& rc : ss.relative_clauses)
            out << "relative:" << to_string(rc.form) << "\t"
                << rc.base.core.text << "\t"
                << (punctuate ? with_period(rc.implied_statement)
                              : rc.implied_statement)
                << "\n";
    });
}

void cmd_realize(const Sentence& s, bool punctuate, std::ostream& out) {
    std::visit(overloaded{[&](const SimpleSentence& ss) {
                              if (ss.basic_sentences) {
                                  for (const BasicSentence& cell :
                                       ss.basic_sentences->cells)
                                      out << (punctuate
                                                  ? with_period(cell.core.text)
                                                  : cell.core.text)
                                          << "\n";
                              } else {
                                  out << ss.core.text << "\n";
                              }
                          },
                          [&](const auto& other) {
                              out << (punctuate ? with_period(other.core.text)
                                                : other.core.text)
                                  << "\n";
                          }},
               s);
}

// The dump envelope the tool writes: the model plus where it came from and
// any diagnostics (always empty today — only validated documents get here).
std::string dump_with_envelope(const Sentence& s, const std::string& source) {
    nlohmann::json dump = nlohmann::json::parse(dump_json(s));
    dump["source_file"] = source;
    dump["diagnostics"] = nlohmann::json::array();
    return dump.dump(2) + "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"NLML sentence model tool"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string json_path;
    bool punctuate = false;

    auto attach = [&](CLI::App* sub, bool model) {
        sub->add_option("files", files, "NLML documents or directories of them")
            ->required();
        if (model) {
            sub->add_option("--json", json_path,
                            "write the parsed model as JSON to this path");
            sub->add_flag("--punctuate", punctuate,
                          "terminate realized statements with a period");
        }
        return sub;
    };
    CLI::App* validate =
        attach(app.add_subcommand("validate", "check documents against the schema"),
               false);
    CLI::App* parse =
        attach(app.add_subcommand("parse", "print surface text and description"),
               true);
    CLI::App* decomp = attach(
        app.add_subcommand("decompose", "split into member sentences"), true);
    CLI::App* implied = attach(
        app.add_subcommand("implied",
                           "print the question or statement behind each clause"),
        true);
    CLI::App* realize = attach(
        app.add_subcommand("realize", "print every realized basic sentence"),
        true);

    std::vector<const char*> argv;
    argv.push_back("nlom");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::vector<std::string> inputs = expand_inputs(files);
    if (inputs.empty()) {
        err << "no .nlml files among the inputs\n";
        return 2;
    }
    if (!json_path.empty() && inputs.size() != 1) {
        err << "--json requires exactly one input file\n";
        return 2;
    }

    int worst = 0;
    auto fail = [&](int severity) { worst = std::max(worst, severity); };

    if (validate->parsed()) {
        for (const std::string& path : inputs) {
            try {
                if (!cmd_validate(path, out, err)) fail(1);
            } catch (const IoError& e) {
                err << path << ": " << e.what() << "\n";
                fail(2);
            }
        }
        return worst;
    }

    for (const std::string& path : inputs) {
        if (inputs.size() > 1) out << "== " << path << " ==\n";
        try {
            const Sentence s = load_sentence(path, err);
            if (parse->parsed()) cmd_parse(s, punctuate, out);
            else if (decomp->parsed()) cmd_decompose(s, punctuate, out);
            else if (implied->parsed()) cmd_implied(s, punctuate, out);
            else if (realize->parsed()) cmd_realize(s, punctuate, out);
            if (!json_path.empty())
                write_atomic(json_path, dump_with_envelope(s, path));
        } catch (const IoError& e) {
            err << path << ": " << e.what() << "\n";
            fail(2);
        } catch (const MarkupError& e) {
            err << path << ": markup error: " << e.what() << "\n";
            fail(1);
        } catch (const ModelError& e) {
            err << path << ": model error: " << e.what() << "\n";
            fail(1);
        } catch (const std::exception& e) {
            err << path << ": " << e.what() << "\n";
            fail(2);
        }
    }
    return worst;
}

} // namespace nlom
