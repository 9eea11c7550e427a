#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fib/presentation.hpp"

namespace fib {

// One replayable move on a presentation. Every kind is checked against the
// free-group identities it relies on before it is applied, so a script replay
// either produces a chain of provably equal presentations or pinpoints the
// first illegal step.
struct TietzeStep {
    enum class Kind {
        add_generator,              // name, word w: adds name and relator name^-1 w
        eliminate_generator,        // name, relator: relator has a single name^+-1; substitute
        replace_by_inverse,         // name: name -> name^-1 everywhere
        insert_power,               // relator, pos, gen, count, modulus_relator (= gen^m):
                                    //   inserts gen^(count*m), then reduces
        remove_power_relator,       // relator (= gen^K), modulus_relator (= gen^m, m | K)
        replace_generator_by_word,  // name, word (= s^c), power_relator (= name^m),
                                    //   defining_relator (s = name^p): needs pc == 1 mod m
        rename_generator,           // name -> to
        cyclic_permute,             // relator, shift
        invert_relator,             // relator
    };

    Kind kind;
    std::string name;      // generator the step acts on
    std::string to;        // rename target
    std::string word;      // word text, parsed against the current presentation
    int relator = -1;      // primary relator index
    int modulus_relator = -1;
    int power_relator = -1;
    int defining_relator = -1;
    std::int64_t count = 0;
    std::int64_t shift = 0;
    std::string pos = "end";  // insert position: decimal index or "end"
};

struct TietzeScript {
    std::string note;
    std::vector<TietzeStep> steps;
};

struct TietzeVerdict {
    bool valid = false;
    int failing_step = -1;  // 0-based; -1 when valid
    std::string reason;
    // presentation after each applied step; trace[0] is the start
    std::vector<Presentation> trace;
};

// Replays `script` from `start` and compares the result with `target` up to
// cyclic permutation/inversion of relators (generators matched by name).
TietzeVerdict verify_tietze_script(const Presentation& start, const TietzeScript& script,
                                   const Presentation& target);

TietzeScript parse_tietze_script_json(const std::string& json_text);
std::string step_kind_name(TietzeStep::Kind k);

}  // namespace fib
