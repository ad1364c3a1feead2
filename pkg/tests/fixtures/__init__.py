# Test fixtures package 