#ifndef DLIN_CORPUS_HPP
#define DLIN_CORPUS_HPP

#include "dlin/drs.hpp"

#include <string>
#include <vector>

namespace dlin {

struct CorpusEntry {
    std::string name;
    DRSeq seq;
};

/// Fixed regression sequences of orders 1 to 3 over both fields.
std::vector<CorpusEntry> regression_corpus();
std::vector<DRSeq> regression_sequences();

} // namespace dlin

#endif
