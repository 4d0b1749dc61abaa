from .JsonRunStore import JsonRunStore as JsonRunStore
from .JsonRunStore import manifest_path as manifest_path
from .RunStore import RunStore as RunStore

stores = {
    "json": JsonRunStore,
}
