# Specorder Tests
