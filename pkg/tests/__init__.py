# Tests package for the p-group catalog tools