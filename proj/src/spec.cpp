#include "oasis2/spec.hpp"

namespace oasis2 {

Iri minted_operator(const Iri& task_id) { return Iri(task_id.value + "_operator"); }
Iri minted_argument(const Iri& task_id) { return Iri(task_id.value + "_argument"); }
Iri minted_object(const Iri& task_id) { return Iri(task_id.value + "_object"); }
Iri minted_input(const Iri& task_id, size_t index) {
    return Iri(task_id.value + "_input" + std::to_string(index + 1));
}
Iri minted_output(const Iri& task_id, size_t index) {
    return Iri(task_id.value + "_output" + std::to_string(index + 1));
}

}  // namespace oasis2
