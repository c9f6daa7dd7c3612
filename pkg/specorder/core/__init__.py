# Configuration-independent core: exceptions and logging
