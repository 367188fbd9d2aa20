#ifndef DLIN_CLI_HPP
#define DLIN_CLI_HPP

#include "dlin/drs.hpp"
#include "dlin/hopf.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dlin {

/// Where a command takes its sequence from. Texts are parsed when the
/// command runs, so parse failures surface as core errors.
struct SeqInput {
    enum class Kind { Literal, Source, Target, Generator };
    Kind kind = Kind::Literal;
    std::string text;  // literal "[...]", field element, or annihilator
    std::string inits; // csv, generator only
};

struct ExpandCmd {
    std::string x;
    Embedding which = Embedding::Target;
    std::size_t terms = 10;
};
struct SolveCmd {
    std::string annihilator;
    std::string inits;
    std::size_t terms = 10;
};
struct FundCmd {
    std::string annihilator;
    std::size_t terms = 10;
};
struct AnnihilateCmd {
    SeqInput input;
    std::optional<std::size_t> bound;
    std::optional<std::size_t> window;
};
struct ProductCmd {
    SeqInput first;
    SeqInput second;
    std::size_t terms = 10;
    std::optional<std::size_t> bound;
};
struct SumCmd {
    SeqInput first;
    SeqInput second;
    std::size_t terms = 10;
    std::optional<std::size_t> bound;
};
struct AntipodeCmd {
    SeqInput input;
    std::size_t terms = 10;
};
struct ComultCmd {
    SeqInput input;
    std::size_t terms = 10;
};
struct RecurCmd {
    SeqInput input;
    std::size_t bound = 1;
    std::optional<std::size_t> window;
};
struct CheckCmd {
    std::string suite = "all";
};

using Operation = std::variant<ExpandCmd, SolveCmd, FundCmd, AnnihilateCmd, ProductCmd, SumCmd, AntipodeCmd,
                               ComultCmd, RecurCmd, CheckCmd>;

struct Command {
    Field field = Field::QZ;
    bool json = false;
    Operation op;
};

/// Caveat printed with every bounded annihilator search.
std::string certified_caveat(std::size_t bound);

/// Runs one command and writes its output. Returns the exit status (nonzero
/// when a check fails); core errors propagate as exceptions.
int run(const Command& cmd, std::ostream& out);

/// The generation checks over the corpus and seeded random generators:
/// three-way agreement and annihilator round trip.
std::vector<CheckReport> generation_suite(std::size_t random_cases);

/// Full front end: parses arguments (without the program name), runs, and
/// reports errors on `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dlin

#endif
