#ifndef VKR_CORPUS_HPP
#define VKR_CORPUS_HPP

#include "templates.hpp"
#include "validate.hpp"

namespace vkr {

// Default corpus location: VKRED_CORPUS_DIR or the compiled-in source path.
std::string corpus_dir();
std::string templates_dir();
std::string figures_dir();

// Deterministically renders every figure of the corpus from the template
// catalog and the bespoke constructions; returns (name, diagram).
std::vector<std::pair<std::string, Diagram>> render_figures();

struct CorpusReport {
    struct Item {
        std::string name;
        bool ok = false;
        std::string detail;
    };
    std::vector<Item> figures;
    std::vector<Item> templates;
    bool ok() const;
};

// Validates every .vkd figure in the corpus and instantiates every template.
CorpusReport check_corpus(unsigned seed = 1);

}  // namespace vkr

#endif
